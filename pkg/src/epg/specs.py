"""Group specifications: the JSON schema consumed by the CLI, the inline
expression grammar, and the factory that realizes a spec as a FiniteGroup.

A spec is a plain dict. Construct kinds:

  {"kind": "cyclic", "n": N}
  {"kind": "dihedral", "n": N}                      # order 2N
  {"kind": "generalized_quaternion", "m": M}        # order 4M, M >= 2
  {"kind": "symmetric", "n": N}
  {"kind": "alternating", "n": N}
  {"kind": "elementary_abelian", "p": P, "k": K}
  {"kind": "sl2p", "p": P}
  {"kind": "permutation_generators", "degree": D, "generators": [[[cycle] ...] ...]}
  {"kind": "cayley_table", "table": [[...], ...]}   # 0-based, row 0 = identity
  {"kind": "direct_product", "factors": [spec, ...]}
  {"kind": "semidirect_product", "n": spec, "h": spec,
   "action": "preset:<name>" | [[index perm], ...]}
  {"kind": "quotient", "g": spec, "by": "center" | [element indices]}

The inline grammar: atoms Z(n) | D(n) | Q(n) | S(n) | A(n) | E(p,k) | SL2(p),
where D and Q take the group order; "name" in double quotes selects a preset;
`expr x expr` is the direct product (left-associative).
"""

from __future__ import annotations

import json
import math
import re
from typing import Any

from . import groups
from .errors import SpecError
from .groups import DEFAULT_MAX_ORDER, FiniteGroup
from .perms import perm_from_cycles

# The order-3 automorphism of the quaternion group Q(8) cycling the three
# maximal cyclic subgroups <x> -> <y> -> <xy>, as a permutation of the
# element indexing used by groups.generalized_quaternion(2):
#   0:e 1:x 2:x^2 3:x^3 4:y 5:xy 6:x^2y 7:x^3y
_Q8_CYCLE_IJK = [0, 4, 2, 6, 5, 1, 7, 3]

ACTION_PRESETS: dict[str, list[list[int]]] = {
    "q8_cycle_ijk": [list(range(8)), _Q8_CYCLE_IJK,
                     [_Q8_CYCLE_IJK[i] for i in _Q8_CYCLE_IJK]],
}

# Inversion action of a dihedral group of order 8 on Z_3 through its
# two-element quotient; the kernel {e, a^2, b, a^2 b} is a Klein four-group.
_D8_ON_Z3 = [[0, 1, 2] if i % 2 == 0 else [0, 2, 1] for i in (0, 1, 2, 3, 0, 1, 2, 3)]

GROUP_PRESETS: dict[str, dict] = {
    # faithful Q8 : Z3 (binary tetrahedral; same element-order multiset as SL(2,3))
    "q8_semidirect_z3": {
        "kind": "semidirect_product",
        "n": {"kind": "generalized_quaternion", "m": 2},
        "h": {"kind": "cyclic", "n": 3},
        "action": "preset:q8_cycle_ijk",
    },
    # Z3 : D8 with the action kernel Z2 x Z2 -- the order-24 group whose
    # enhanced power graph is not a cograph (alongside Q(12) x Z(2))
    "z3_semidirect_d8": {
        "kind": "semidirect_product",
        "n": {"kind": "cyclic", "n": 3},
        "h": {"kind": "dihedral", "n": 4},
        "action": _D8_ON_Z3,
    },
}

_SIMPLE_KINDS = {
    "cyclic": ("n",),
    "dihedral": ("n",),
    "generalized_quaternion": ("m",),
    "symmetric": ("n",),
    "alternating": ("n",),
    "elementary_abelian": ("p", "k"),
    "sl2p": ("p",),
}


def validate_spec(spec: Any) -> dict:
    """Shape-check a construct spec, returning it; raises SpecError with a path."""
    return _validate(spec, "construct")


def _validate(spec: Any, path: str) -> dict:
    if not isinstance(spec, dict):
        raise SpecError(f"{path}: spec must be an object")
    kind = spec.get("kind")
    if kind in _SIMPLE_KINDS:
        for fieldname in _SIMPLE_KINDS[kind]:
            v = spec.get(fieldname)
            if not isinstance(v, int) or v < 1:
                raise SpecError(f"{path}.{fieldname}: positive integer required for {kind}")
        return spec
    if kind == "permutation_generators":
        if not isinstance(spec.get("degree"), int) or spec["degree"] < 1:
            raise SpecError(f"{path}.degree: positive integer required")
        gens = spec.get("generators")
        if not isinstance(gens, list) or not gens:
            raise SpecError(f"{path}.generators: nonempty list of cycle lists required")
        return spec
    if kind == "cayley_table":
        table = spec.get("table")
        if not isinstance(table, list) or not table:
            raise SpecError(f"{path}.table: nonempty square array required")
        return spec
    if kind == "direct_product":
        factors = spec.get("factors")
        if not isinstance(factors, list) or len(factors) < 2:
            raise SpecError(f"{path}.factors: at least two factor specs required")
        for i, f in enumerate(factors):
            _validate(f, f"{path}.factors[{i}]")
        return spec
    if kind == "semidirect_product":
        _validate(spec.get("n"), f"{path}.n")
        _validate(spec.get("h"), f"{path}.h")
        action = spec.get("action")
        if isinstance(action, str):
            if not action.startswith("preset:") or action[7:] not in ACTION_PRESETS:
                raise SpecError(f"{path}.action: unknown preset {action!r}")
        elif not isinstance(action, list):
            raise SpecError(f"{path}.action: preset name or list of index permutations required")
        return spec
    if kind == "quotient":
        _validate(spec.get("g"), f"{path}.g")
        by = spec.get("by")
        if by != "center" and not isinstance(by, list):
            raise SpecError(f"{path}.by: 'center' or a list of element indices required")
        return spec
    raise SpecError(f"{path}: unknown construct kind {kind!r}")


def spec_order(spec: dict) -> int:
    """Group order computed from the spec alone (no group is built)."""
    kind = spec["kind"]
    if kind == "cyclic":
        return spec["n"]
    if kind == "dihedral":
        return 2 * spec["n"]
    if kind == "generalized_quaternion":
        return 4 * spec["m"]
    if kind == "symmetric":
        return math.factorial(spec["n"])
    if kind == "alternating":
        n = spec["n"]
        return max(1, math.factorial(n) // 2)
    if kind == "elementary_abelian":
        return spec["p"] ** spec["k"]
    if kind == "sl2p":
        p = spec["p"]
        return p * (p * p - 1)
    if kind == "cayley_table":
        return len(spec["table"])
    if kind == "direct_product":
        out = 1
        for f in spec["factors"]:
            out *= spec_order(f)
        return out
    if kind == "semidirect_product":
        return spec_order(spec["n"]) * spec_order(spec["h"])
    raise SpecError(f"order of a {kind!r} spec is not known before construction")


def build(spec: dict, *, max_order: int = DEFAULT_MAX_ORDER,
          name: str | None = None) -> FiniteGroup:
    """Realize a validated construct spec as a FiniteGroup."""
    validate_spec(spec)
    kind = spec["kind"]
    if kind in ("cyclic", "dihedral", "generalized_quaternion", "elementary_abelian",
                "symmetric", "alternating", "sl2p", "direct_product",
                "semidirect_product") and spec_order(spec) > max_order:
        from .errors import SizeLimitError
        raise SizeLimitError(
            f"spec of order {spec_order(spec)} exceeds the maximum order {max_order}",
            cap=max_order)
    if kind == "cyclic":
        G = groups.cyclic(spec["n"])
    elif kind == "dihedral":
        G = groups.dihedral(spec["n"])
    elif kind == "generalized_quaternion":
        G = groups.generalized_quaternion(spec["m"])
    elif kind == "symmetric":
        G = groups.symmetric(spec["n"], max_order=max_order)
    elif kind == "alternating":
        G = groups.alternating(spec["n"], max_order=max_order)
    elif kind == "elementary_abelian":
        G = groups.elementary_abelian(spec["p"], spec["k"])
    elif kind == "sl2p":
        G = groups.sl2(spec["p"], max_order=max_order)
    elif kind == "permutation_generators":
        degree = spec["degree"]
        gens = [perm_from_cycles([[int(p) for p in cyc] for cyc in g], degree)
                for g in spec["generators"]]
        G = groups.closure(gens, max_order=max_order, name=name or "perm-closure")
    elif kind == "cayley_table":
        G = groups.from_table(spec["table"], name=name or "table")
    elif kind == "direct_product":
        factors = [build(f, max_order=max_order) for f in spec["factors"]]
        G = factors[0]
        for H in factors[1:]:
            G = groups.direct_product(G, H, max_order=max_order)
    elif kind == "semidirect_product":
        N = build(spec["n"], max_order=max_order)
        H = build(spec["h"], max_order=max_order)
        action = spec["action"]
        if isinstance(action, str):
            action = ACTION_PRESETS[action[7:]]
        G = groups.semidirect_product(N, H, action, max_order=max_order)
    elif kind == "quotient":
        big = build(spec["g"], max_order=max_order)
        by = spec["by"]
        normal = groups.center(big) if by == "center" else frozenset(int(i) for i in by)
        G = groups.quotient(big, normal)
    else:
        raise SpecError(f"unknown construct kind {kind!r}")
    if name is not None:
        G.name = name
    return G


# ---------------------------------------------------------------------------
# inline expression grammar

_ATOM_RE = re.compile(
    r"^\s*(?:(Z|D|Q|S|A)\((\d+)\)|E\((\d+),\s*(\d+)\)|SL2\((\d+)\))\s*$")
_PRESET_RE = re.compile(r'^\s*"([A-Za-z0-9_\-]+)"\s*$')


def parse_expr(text: str) -> dict:
    """Parse an inline group expression into a construct spec."""
    parts = _split_product(text)
    specs = [_parse_atom(p) for p in parts]
    if len(specs) == 1:
        return specs[0]
    return {"kind": "direct_product", "factors": specs}


def _split_product(text: str) -> list[str]:
    # split on 'x' tokens that sit outside parentheses and quotes
    parts: list[str] = []
    depth = 0
    quoted = False
    cur: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == '"':
            quoted = not quoted
            cur.append(ch)
        elif not quoted and ch == "(":
            depth += 1
            cur.append(ch)
        elif not quoted and ch == ")":
            depth -= 1
            cur.append(ch)
        elif (not quoted and depth == 0 and ch in "xX"
              and (i == 0 or not text[i - 1].isalnum())
              and (i + 1 >= len(text) or not text[i + 1].isalnum())):
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
        i += 1
    parts.append("".join(cur))
    if any(not p.strip() for p in parts):
        raise SpecError(f"malformed group expression: {text!r}")
    return parts


def _parse_atom(text: str) -> dict:
    m = _PRESET_RE.match(text)
    if m:
        name = m.group(1)
        if name not in GROUP_PRESETS:
            raise SpecError(f"unknown preset {name!r} (at {text.strip()!r})")
        return GROUP_PRESETS[name]
    m = _ATOM_RE.match(text)
    if not m:
        raise SpecError(f"malformed group atom {text.strip()!r}")
    fam, nval, ep, ek, slp = m.groups()
    if fam == "Z":
        return {"kind": "cyclic", "n": int(nval)}
    if fam == "D":
        order = int(nval)
        if order % 2 or order < 2:
            raise SpecError(f"D({order}): dihedral order must be even and >= 2")
        return {"kind": "dihedral", "n": order // 2}
    if fam == "Q":
        order = int(nval)
        if order % 4 or order < 8:
            raise SpecError(f"Q({order}): quaternion order must be a multiple of 4, >= 8")
        return {"kind": "generalized_quaternion", "m": order // 4}
    if fam == "S":
        return {"kind": "symmetric", "n": int(nval)}
    if fam == "A":
        return {"kind": "alternating", "n": int(nval)}
    if ep is not None:
        return {"kind": "elementary_abelian", "p": int(ep), "k": int(ek)}
    return {"kind": "sl2p", "p": int(slp)}


def print_expr(spec: dict) -> str:
    """Inverse of parse_expr for the expressible spec kinds."""
    kind = spec["kind"]
    if kind == "cyclic":
        return f"Z({spec['n']})"
    if kind == "dihedral":
        return f"D({2 * spec['n']})"
    if kind == "generalized_quaternion":
        return f"Q({4 * spec['m']})"
    if kind == "symmetric":
        return f"S({spec['n']})"
    if kind == "alternating":
        return f"A({spec['n']})"
    if kind == "elementary_abelian":
        return f"E({spec['p']},{spec['k']})"
    if kind == "sl2p":
        return f"SL2({spec['p']})"
    if kind == "direct_product":
        return " x ".join(print_expr(f) for f in spec["factors"])
    for pname, pspec in GROUP_PRESETS.items():
        if pspec == spec:
            return f'"{pname}"'
    raise SpecError(f"spec kind {kind!r} has no expression form")


# ---------------------------------------------------------------------------
# spec files (single object or import array)

def load_spec_file(path: str) -> dict:
    """Read one {"name", "construct"} object from a JSON file."""
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "construct" not in data:
        raise SpecError(f"{path}: expected an object with a 'construct' field")
    validate_spec(data["construct"])
    return data


def load_import_file(path: str) -> tuple[list[dict], list[tuple[int, str]]]:
    """Read an array of spec objects; returns (valid entries, per-entry errors).

    Each valid entry is {"name": str, "construct": spec}. Invalid entries are
    reported as (index, message) and skipped; valid ones are retained.
    """
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise SpecError(f"{path}: expected a JSON array of spec objects")
    valid: list[dict] = []
    errors: list[tuple[int, str]] = []
    for i, entry in enumerate(data):
        try:
            if not isinstance(entry, dict) or "construct" not in entry:
                raise SpecError("expected an object with a 'construct' field")
            validate_spec(entry["construct"])
            name = entry.get("name") or f"import[{i}]"
            valid.append({"name": str(name), "construct": entry["construct"]})
        except SpecError as exc:
            errors.append((i, str(exc)))
    return valid, errors
