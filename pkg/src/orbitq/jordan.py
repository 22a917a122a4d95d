"""Case registry: block data (q, d, w) per case, plus derived vectors.

Every downstream spectral quantity is computed from the block list and m
alone.  Case identifiers are "FAMILY:params" strings:

    E6:6  E7:7  E8:8  F4:4  E6:2  E7:-5  E8:-24  G2:2
    SO:p,q   (3 <= p <= q)
    SL:n     (n >= 3)
"""

from __future__ import annotations

from dataclasses import dataclass


class UnknownCaseError(ValueError):
    pass


@dataclass(frozen=True)
class JordanBlock:
    q: int  # degree of the simple component, 1..4
    d: int  # root multiplicity
    w: int  # exponent of this block's norm in the degree-4 monomial

    def __post_init__(self):
        if not (1 <= self.q <= 4) or self.d < 0 or self.w < 1:
            raise ValueError(f"bad block ({self.q},{self.d},{self.w})")


@dataclass(frozen=True)
class JordanCase:
    id: str
    blocks: tuple
    m: int
    labels: dict  # display strings: k, p, g, G, norm_monomial

    @property
    def q_total(self) -> int:
        return sum(b.q for b in self.blocks)

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "blocks": [[b.q, b.d, b.w] for b in self.blocks],
            "m": self.m,
            "labels": dict(self.labels),
        }


def _blk(q, d, w):
    return JordanBlock(q, d, w)


# Fixed rows: compact part, degree-1 space, complex algebra, real group.
_EXCEPTIONAL = {
    "E6:6": ((_blk(4, 1, 1),), 10,
             {"k": "sp8", "p": "Wedge_o^4 C^8", "g": "E6", "G": "E6(6)",
              "norm_monomial": "P_{4,R}"}),
    "E7:7": ((_blk(4, 2, 1),), 16,
             {"k": "sl8", "p": "Wedge^4 C^8", "g": "E7", "G": "E7(7)",
              "norm_monomial": "P_{4,C}"}),
    "E8:8": ((_blk(4, 4, 1),), 28,
             {"k": "so16", "p": "C^128", "g": "E8", "G": "E8(8)",
              "norm_monomial": "P_{4,H}"}),
    "F4:4": ((_blk(3, 1, 1), _blk(1, 0, 1)), 7,
             {"k": "sp6+sl2", "p": "Wedge_o^3 C^6 (x) C^2", "g": "F4", "G": "F4(4)",
              "norm_monomial": "P_{3,R} P'_1"}),
    "E6:2": ((_blk(3, 2, 1), _blk(1, 0, 1)), 10,
             {"k": "sl6+sl2", "p": "Wedge^3 C^6 (x) C^2", "g": "E6", "G": "E6(2)",
              "norm_monomial": "P_{3,C} P'_1"}),
    "E7:-5": ((_blk(3, 4, 1), _blk(1, 0, 1)), 16,
              {"k": "so12+sl2", "p": "C^32 (x) C^2", "g": "E7", "G": "E7(-5)",
               "norm_monomial": "P_{3,H} P'_1"}),
    "E8:-24": ((_blk(3, 8, 1), _blk(1, 0, 1)), 28,
               {"k": "e7+sl2", "p": "C^56 (x) C^2", "g": "E8", "G": "E8(-24)",
                "norm_monomial": "P_{3,O} P'_1"}),
    "G2:2": ((_blk(1, 0, 3), _blk(1, 0, 1)), 2,
             {"k": "sl2+sl2", "p": "S^3 C^2 (x) C^2", "g": "G2", "G": "G2(2)",
              "norm_monomial": "P_1^3 P'_1"}),
}

# dim Y per complex algebra family (for the m+1 cross-check)
_DIM_Y = {"E6": 11, "E7": 17, "E8": 29, "F4": 8, "G2": 3}


def _so_side_blocks(s: int) -> list:
    # one orthogonal side: s>=5 one rank-2 block, s=4 splits, s=3 degenerates
    if s >= 5:
        return [_blk(2, s - 4, 1)]
    if s == 4:
        return [_blk(1, 0, 1), _blk(1, 0, 1)]
    return [_blk(1, 0, 2)]


def lookup_case(case_id: str) -> JordanCase:
    if case_id in _EXCEPTIONAL:
        blocks, m, labels = _EXCEPTIONAL[case_id]
        return JordanCase(case_id, blocks, m, labels)
    if case_id.startswith("SO:"):
        try:
            p, q = (int(x) for x in case_id[3:].split(","))
        except ValueError:
            raise UnknownCaseError(f"malformed case id {case_id!r}") from None
        if not (3 <= p <= q):
            raise UnknownCaseError(f"need 3 <= p <= q in {case_id!r}")
        blocks = tuple(_so_side_blocks(p) + _so_side_blocks(q))
        labels = {"k": f"so{p}+so{q}", "p": f"C^{p} (x) C^{q}",
                  "g": f"so{p + q}", "G": f"SO({p},{q})~",
                  "norm_monomial": _so_norm_label(p) + " " + _so_norm_label(q, prime=True)}
        return JordanCase(case_id, blocks, p + q - 4, labels)
    if case_id.startswith("SL:"):
        try:
            n = int(case_id[3:])
        except ValueError:
            raise UnknownCaseError(f"malformed case id {case_id!r}") from None
        if n < 3:
            raise UnknownCaseError(f"need n >= 3 in {case_id!r}")
        if n >= 5:
            blocks = (_blk(2, n - 4, 2),)
            norm = f"P_{{2;{n}}}^2"
        elif n == 4:
            blocks = (_blk(1, 0, 2), _blk(1, 0, 2))
            norm = "P_1^2 P'_1^2"
        else:
            blocks = (_blk(1, 0, 4),)
            norm = "P_1^4"
        labels = {"k": f"so{n}", "p": f"S_o^2 C^{n}", "g": f"sl{n}",
                  "G": f"SL({n},R)~", "norm_monomial": norm}
        return JordanCase(case_id, blocks, n - 2, labels)
    raise UnknownCaseError(f"unknown case id {case_id!r}")


def _so_norm_label(s: int, prime: bool = False) -> str:
    mark = "'" if prime else ""
    if s >= 5:
        return f"P{mark}_{{2;{s}}}"
    if s == 4:
        return f"P{mark}_1 P{mark}{mark}_1"
    return f"P{mark}_1^2"


def derived_vectors(case: JordanCase):
    """(v, delta, block offsets): one slot per degree step, q_total in all."""
    v, delta, offsets = [], [], []
    c = 0
    for b in case.blocks:
        offsets.append(c)
        for j in range(1, b.q + 1):
            v.append(b.w)
            delta.append(b.d * (b.q - j))
        c += b.q
    return tuple(v), tuple(delta), tuple(offsets)


def expected_dim_y(case: JordanCase) -> int:
    fam = case.labels["g"]
    if fam in _DIM_Y:
        return _DIM_Y[fam]
    if fam.startswith("so"):
        return int(fam[2:]) - 3
    if fam.startswith("sl"):
        return int(fam[2:]) - 1
    raise UnknownCaseError(f"no dimension rule for {fam!r}")


def validate_case(case: JordanCase) -> list:
    """Per-identity verdicts: (name, passed, detail)."""
    v, delta, _ = derived_vectors(case)
    q = case.q_total
    checks = []
    s1 = sum(b.q * b.w for b in case.blocks)
    checks.append(("degree-4 monomial", s1 == 4, f"sum q*w = {s1}"))
    s2 = sum(b.d * b.q * (b.q - 1) // 2 for b in case.blocks)
    checks.append(("delta sum", s2 == case.m - q,
                   f"sum d*q*(q-1)/2 = {s2}, m-q = {case.m - q}"))
    s3 = sum(v)
    checks.append(("index set size", s3 == 4, f"sum v = {s3}"))
    checks.append(("delta consistency", sum(delta) == case.m - q,
                   f"sum delta = {sum(delta)}"))
    dy = expected_dim_y(case)
    checks.append(("cone dimension", dy == case.m + 1,
                   f"dim Y = {dy}, m+1 = {case.m + 1}"))
    return checks


def sweep_case_ids(pmax: int = 12, nmax: int = 12) -> list:
    """Deterministic enumeration: fixed rows, then SO(p,q), then SL(n)."""
    ids = list(_EXCEPTIONAL)
    for p in range(3, pmax + 1):
        for q in range(p, pmax + 1):
            ids.append(f"SO:{p},{q}")
    for n in range(3, nmax + 1):
        ids.append(f"SL:{n}")
    return ids
