"""Named structures: the 25 order-four involution semigroups with non-trivial
involution, the small order-two/three examples and the three-element
semilattice used as a quotient target."""

from __future__ import annotations

from dataclasses import dataclass

from .model import InvolutionSemigroup


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    rows: tuple  # four digit strings, top to bottom
    inv: str
    label: str  # condition mark: C1..C4 or A0/B0

    @property
    def semigroup(self) -> InvolutionSemigroup:
        return InvolutionSemigroup.from_digits("".join(self.rows), self.inv, self.name)


def _e(name, rows, inv, label):
    return CatalogEntry(name, tuple(rows.split()), inv, label)


TABLE1 = (
    _e("A1", "1111 1211 1131 1114", "1243", "C1"),
    _e("A2", "1111 1212 1133 1234", "1324", "C1"),
    _e("A3", "1111 1222 1232 1224", "1243", "C1"),
    _e("A4", "1133 2244 1133 2244", "4231", "C3"),
    _e("A5", "2111 1222 1222 1222", "1243", "C1"),
    _e("A6", "2111 1222 1232 1224", "1243", "C1"),
    _e("A7", "2122 1211 2122 2122", "1243", "C1"),
    _e("A8", "2143 1234 4312 3421", "1243", "C1"),
    _e("A9", "2143 1234 4321 3412", "1243", "C1"),
    _e("B1", "2212 2222 1234 2242", "4231", "C1"),
    _e("B2", "2212 2222 2234 2222", "4231", "C4"),
    _e("B3", "2222 2222 2211 2211", "1243", "C1"),
    _e("B4", "2222 2222 2211 2221", "1243", "C2"),
    _e("B5", "2222 2222 2212 2221", "1243", "C1"),
    _e("B6", "2222 2222 2221 2212", "1243", "C1"),
    _e("B7", "2222 2222 2221 2222", "1243", "C2"),
    _e("B8", "2222 2222 2222 2222", "3214", "C1"),
    _e("B9", "2222 2222 2222 2224", "3214", "C1"),
    _e("C1", "2222 2222 2232 2224", "1243", "C1"),
    _e("C2", "2224 2224 2224 4444", "3214", "C1"),
    _e("C3", "2234 2234 3342 4423", "1243", "C1"),
    _e("C4", "2311 3122 1233 1234", "2134", "C1"),
    _e("C5", "2314 3124 1234 4444", "2134", "C1"),
    _e("C6", "2212 2222 2232 1214", "1243", "A0"),
    _e("C7", "2212 2222 2232 1224", "1243", "B0"),
)

A0 = InvolutionSemigroup.from_digits("2212222222321214", "1243", "A0")
B0 = InvolutionSemigroup.from_digits("2212222222321224", "1243", "B0")

# three-element semilattice {0 < e, f} with e <-> f: 1 = 0, 2 = e, 3 = f
SL3 = InvolutionSemigroup.from_digits("111121113", "132", "Sl3")

# the order-three classes with a non-trivial involution
ORDER3_NONTRIVIAL = {
    "S": InvolutionSemigroup.from_digits("111111111", "132", "S"),
    "Sl3": SL3,
    "Z3": InvolutionSemigroup.from_digits("123231312", "132", "Z3"),
}

# quotient maps onto Sl3 (element of A0/B0 -> element of Sl3): 1,2 -> 0, 3 -> e, 4 -> f
SL3_QUOTIENT = {1: 1, 2: 1, 3: 2, 4: 3}


def table1_catalog() -> list[CatalogEntry]:
    return list(TABLE1)


def named_models() -> dict[str, InvolutionSemigroup]:
    out = {"a0": A0, "b0": B0, "sl3": SL3}
    for e in TABLE1:
        out[e.name.lower()] = e.semigroup
    return out
