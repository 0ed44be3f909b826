"""The built-in group catalog the verification suite runs over.

Base families: Z(n) for n <= 100, D(2n) for 2 <= n <= 30, Q(4m) for
2 <= m <= 15, elementary abelian p^k <= 243 for p in {2, 3, 5}, S(2..6),
A(3..7), SL2(3), SL2(5). On top of those: a handful of named non-coprime
products and the two order-24 semidirect presets, plus every direct product
of two distinct base entries with coprime orders and product order <= 200.
Trivial factors are skipped when forming products (they only duplicate the
other factor).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import specs
from .errors import SpecError
from .groups import DEFAULT_MAX_ORDER, FiniteGroup

PRODUCT_CAP = 200


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: dict
    order: int
    tags: frozenset = field(default_factory=frozenset)
    meta: dict = field(default_factory=dict)
    source: str = "builtin"

    def build(self, *, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
        return specs.build(self.spec, max_order=max_order, name=self.name)


def _entry(name: str, spec: dict, tags: set[str], **meta) -> CatalogEntry:
    return CatalogEntry(name=name, spec=spec, order=specs.spec_order(spec),
                        tags=frozenset(tags), meta=dict(meta))


def default_catalog() -> list[CatalogEntry]:
    base: list[CatalogEntry] = []
    for n in range(1, 101):
        base.append(_entry(f"Z({n})", {"kind": "cyclic", "n": n}, {"cyclic"}, n=n))
    for n in range(2, 31):
        base.append(_entry(f"D({2 * n})", {"kind": "dihedral", "n": n}, {"dihedral"}, n=n))
    for m in range(2, 16):
        base.append(_entry(f"Q({4 * m})", {"kind": "generalized_quaternion", "m": m},
                           {"quaternion"}, m=m))
    for p in (2, 3, 5):
        k = 1
        while p ** k <= 243:
            base.append(_entry(f"E({p},{k})",
                               {"kind": "elementary_abelian", "p": p, "k": k},
                               {"elem_abelian"}, p=p, k=k))
            k += 1
    for n in range(2, 7):
        base.append(_entry(f"S({n})", {"kind": "symmetric", "n": n}, {"symmetric"}, n=n))
    for n in range(3, 8):
        base.append(_entry(f"A({n})", {"kind": "alternating", "n": n}, {"alternating"}, n=n))
    base.append(_entry("SL2(3)", {"kind": "sl2p", "p": 3}, {"sl2"}))
    base.append(_entry("SL2(5)", {"kind": "sl2p", "p": 5}, {"sl2"}))

    named: list[CatalogEntry] = [
        _entry("q8_semidirect_z3", specs.GROUP_PRESETS["q8_semidirect_z3"],
               {"special", "preset"}),
        _entry("z3_semidirect_d8", specs.GROUP_PRESETS["z3_semidirect_d8"],
               {"special", "preset"}),
        _entry("Q(12) x Z(2)",
               {"kind": "direct_product",
                "factors": [{"kind": "generalized_quaternion", "m": 3},
                            {"kind": "cyclic", "n": 2}]},
               {"special"}),
        _entry("Z(2) x Z(2) x S(3)",
               {"kind": "direct_product",
                "factors": [{"kind": "cyclic", "n": 2}, {"kind": "cyclic", "n": 2},
                            {"kind": "symmetric", "n": 3}]},
               {"special"}),
        _entry("Z(3) x S(3)",
               {"kind": "direct_product",
                "factors": [{"kind": "cyclic", "n": 3}, {"kind": "symmetric", "n": 3}]},
               {"special"}),
        _entry("Z(2) x Z(4)",
               {"kind": "direct_product",
                "factors": [{"kind": "cyclic", "n": 2}, {"kind": "cyclic", "n": 4}]},
               {"special"}),
        _entry("Z(6) x Z(6)",
               {"kind": "direct_product",
                "factors": [{"kind": "cyclic", "n": 6}, {"kind": "cyclic", "n": 6}]},
               {"special"}),
    ]

    products: list[CatalogEntry] = []
    for i, a in enumerate(base):
        if a.order == 1:
            continue
        for b in base[i + 1:]:
            if b.order == 1:
                continue
            if math.gcd(a.order, b.order) != 1:
                continue
            if a.order * b.order > PRODUCT_CAP:
                continue
            products.append(_entry(
                f"{a.name} x {b.name}",
                {"kind": "direct_product", "factors": [a.spec, b.spec]},
                {"product"}))

    out = base + named + products
    names = [e.name for e in out]
    if len(set(names)) != len(names):
        raise SpecError("catalog entry names are not unique")
    return out


def entry_by_name(catalog: list[CatalogEntry], name: str) -> CatalogEntry:
    for e in catalog:
        if e.name == name:
            return e
    raise SpecError(f"no catalog entry named {name!r}")


def imported_entries(valid_specs: list[dict]) -> list[CatalogEntry]:
    """Wrap validated import-file entries as catalog entries."""
    out = []
    for item in valid_specs:
        out.append(CatalogEntry(name=item["name"], spec=item["construct"],
                                order=_order_or_build(item["construct"]),
                                tags=frozenset({"import"}), meta={}, source="import"))
    return out


def _order_or_build(spec: dict) -> int:
    try:
        return specs.spec_order(spec)
    except SpecError:
        return specs.build(spec).order
