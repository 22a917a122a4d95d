"""Concrete operator realizations at desk scale.

Three models ship: the flat oscillator tower, the rank-8 example on
8 variables (16 quartic raising operators), and the rank-14 example on
4 variables (8 raising operators with a 1/27 factor).  Each model knows
its graded basis, its raising/lowering pairs, and its compact operators;
brute-force closure and the invariant Gram recursion live here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial

from .exactalg import Polynomial, VariableContext
from .opcalc import (OpCompose, OpDeriv, OpGradeDivide, OpMul, OpScalar,
                     OpScaled, OpSum, OperatorExpr, matrix_on_basis,
                     solve_linear_system, span_structure,
                     verify_structure_constants)

Q = Fraction


@dataclass
class GeneratorInfo:
    name: str
    f: Polynomial            # single-monomial raising section
    raise_op: OperatorExpr   # multiplication by f
    lower: OperatorExpr      # adjoint of raise_op for the Gram recursion
    conjugate_index: int


@dataclass
class ModelSpec:
    name: str
    ctx: VariableContext
    r0: Fraction
    grading: str
    grading_op: OperatorExpr
    compact_ops: list        # (name, op, adjoint index into compact_ops)
    generators: list         # GeneratorInfo
    algebra_ops: list        # (name, op) — the full transcribed list
    sl2: tuple               # (e, ebar, h) operators
    case_twist: tuple | None # (case id, twist) for the spectral cross-check
    _level_of: callable = field(repr=False, default=None)
    _level_basis: callable = field(repr=False, default=None)
    _hw: callable = field(repr=False, default=None)

    def level_of(self, mono: tuple):
        return self._level_of(mono)

    def level_basis(self, n: int) -> list:
        return self._level_basis(n)

    def hw_monomial(self, n: int) -> tuple:
        return self._hw(n)


def _grade_reciprocal(grading: str) -> OperatorExpr:
    # 1/(g(g+1)), applied after the inner operator
    return OpCompose(OpGradeDivide(grading, 1, 1), OpGradeDivide(grading, 0, 1))


def build_model(name: str, n: int = 1) -> ModelSpec:
    if name == "so44":
        return _build_so44()
    if name == "g2":
        return _build_g2()
    if name in ("oscillator", "osc"):
        if n < 1:
            raise ValueError("oscillator needs n >= 1")
        return _build_oscillator(n)
    raise ValueError(f"unknown model {name!r}")


# ---------------------------------------------------------------- oscillator

def _build_oscillator(nv: int) -> ModelSpec:
    names = [f"z{j + 1}" for j in range(nv)]
    ctx = VariableContext(names)
    ctx.add_grading("energy", [1] * nv, Q(nv, 2))
    zs = [ctx.var(nm) for nm in names]

    compact = []
    for j in range(nv):
        for k in range(nv):
            op = OpCompose(OpMul(zs[j]), OpDeriv((names[k],)))
            if j == k:
                op = OpSum((op, OpScalar(Q(1, 2))))
            compact.append((f"z{j + 1}d{k + 1}", op, None))
    # adjoint of z_j d_k + delta/2 is z_k d_j + delta/2
    compact = [(nm, op, _osc_pair(j, k, nv)) for (nm, op, _), (j, k)
               in zip(compact, product(range(nv), repeat=2))]

    gens = [GeneratorInfo(names[j], zs[j], OpMul(zs[j]), OpDeriv((names[j],)), j)
            for j in range(nv)]

    algebra = list(compact_names_ops(compact))
    for j in range(nv):
        for k in range(j, nv):
            algebra.append((f"z{j + 1}z{k + 1}", OpMul(zs[j] * zs[k])))
            algebra.append((f"d{j + 1}d{k + 1}", OpDeriv((names[j], names[k]))))

    e_poly = ctx.zero()
    for z in zs:
        e_poly = e_poly + z * z
    e_op = OpScaled(Q(1, 2), OpMul(e_poly))
    ebar_op = OpScaled(Q(-1, 2), OpSum(tuple(OpDeriv((nm, nm)) for nm in names)))
    grading_op = OpSum(tuple(OpCompose(OpMul(zs[j]), OpDeriv((names[j],)))
                             for j in range(nv)) + (OpScalar(Q(nv, 2)),))

    def level_of(mono):
        return sum(mono)

    def level_basis(n):
        return sorted(_compositions(n, nv), reverse=True)

    def hw(n):
        return (n,) + (0,) * (nv - 1)

    return ModelSpec("oscillator", ctx, Q(nv, 2), "energy", grading_op, compact,
                     gens, algebra, (e_op, ebar_op, grading_op), None,
                     level_of, level_basis, hw)


def _osc_pair(j, k, nv):
    return k * nv + j


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def compact_names_ops(compact):
    for nm, op, _ in compact:
        yield (nm, op)


# ------------------------------------------------------------------- so(4,4)

def _build_so44() -> ModelSpec:
    names = [f"x{p}_{i}" for p in range(1, 5) for i in (1, 2)]
    ctx = VariableContext(names)
    ctx.add_grading("beta", [1, 1, 0, 0, 0, 0, 0, 0], 1)
    recip = _grade_reciprocal("beta")

    def var(p, i):
        return ctx.var(f"x{p}_{i}")

    compact = []
    for p in range(1, 5):
        base = len(compact)
        e = OpCompose(OpMul(var(p, 1)), OpDeriv((f"x{p}_2",)))
        f_ = OpCompose(OpMul(var(p, 2)), OpDeriv((f"x{p}_1",)))
        h = OpSum((OpCompose(OpMul(var(p, 1)), OpDeriv((f"x{p}_1",))),
                   OpScaled(-1, OpCompose(OpMul(var(p, 2)), OpDeriv((f"x{p}_2",))))))
        compact += [(f"E{p}", e, base + 1), (f"F{p}", f_, base), (f"H{p}", h, base + 2)]

    idx_tuples = list(product((1, 2), repeat=4))
    gens = []
    algebra = list(compact_names_ops(compact))
    for idx in idx_tuples:
        f_poly = ctx.one()
        for p, i in enumerate(idx, start=1):
            f_poly = f_poly * var(p, i)
        own_word = tuple(f"x{p}_{i}" for p, i in enumerate(idx, start=1))
        conj = tuple(3 - i for i in idx)
        conj_word = tuple(f"x{p}_{i}" for p, i in enumerate(conj, start=1))
        sign = (-1) ** sum(idx)
        gname = "x" + "".join(map(str, idx))
        gens.append(GeneratorInfo(gname, f_poly, OpMul(f_poly),
                                  OpCompose(recip, OpDeriv(own_word)),
                                  idx_tuples.index(conj)))
        algebra.append((f"A{''.join(map(str, idx))}",
                        OpSum((OpMul(f_poly),
                               OpScaled(-sign, OpCompose(recip, OpDeriv(conj_word)))))))

    e_op = algebra[12 + idx_tuples.index((1, 1, 1, 1))][1]
    ebar_op = algebra[12 + idx_tuples.index((2, 2, 2, 2))][1]
    h_op = OpScaled(Q(1, 2), OpSum(tuple(compact[3 * p + 2][1] for p in range(4))))
    grading_op = OpSum((OpCompose(OpMul(var(1, 1)), OpDeriv(("x1_1",))),
                        OpCompose(OpMul(var(1, 2)), OpDeriv(("x1_2",))),
                        OpScalar(1)))

    def level_of(mono):
        degs = [mono[2 * p] + mono[2 * p + 1] for p in range(4)]
        return degs[0] if len(set(degs)) == 1 else None

    def level_basis(n):
        out = []
        for a, b, c, d in product(range(n + 1), repeat=4):
            out.append((a, n - a, b, n - b, c, n - c, d, n - d))
        return sorted(out, reverse=True)

    def hw(n):
        return (n, 0) * 4

    return ModelSpec("so44", ctx, Q(1), "beta", grading_op, compact, gens,
                     algebra, (e_op, ebar_op, h_op), ("SO:4,4", "L0"),
                     level_of, level_basis, hw)


# ----------------------------------------------------------------------- G2

def _build_g2() -> ModelSpec:
    names = ["u1", "u2", "x1", "x2"]
    ctx = VariableContext(names)
    ctx.add_grading("beta", [0, 0, 1, 1], 1)
    recip = _grade_reciprocal("beta")
    u = [ctx.var("u1"), ctx.var("u2")]
    x = [ctx.var("x1"), ctx.var("x2")]

    def sl2_ops(a, b):  # names of the two variables
        e = OpCompose(OpMul(ctx.var(a)), OpDeriv((b,)))
        f_ = OpCompose(OpMul(ctx.var(b)), OpDeriv((a,)))
        h = OpSum((OpCompose(OpMul(ctx.var(a)), OpDeriv((a,))),
                   OpScaled(-1, OpCompose(OpMul(ctx.var(b)), OpDeriv((b,))))))
        return e, f_, h

    eu, fu, hu = sl2_ops("u1", "u2")
    ex, fx, hx = sl2_ops("x1", "x2")
    compact = [("Eu", eu, 1), ("Fu", fu, 0), ("Hu", hu, 2),
               ("Ex", ex, 4), ("Fx", fx, 3), ("Hx", hx, 5)]

    # generator tags: ("A", i, j) -> u_i^3 x_j ; ("B", i, j) -> u_i^2 u_i' x_j
    tags = [(kind, i, j) for kind in ("A", "B") for i in (1, 2) for j in (1, 2)]

    def words(kind, i, j):
        ii = 3 - i
        if kind == "A":
            own = (f"u{i}",) * 3 + (f"x{j}",)
            conj = (f"u{ii}",) * 3 + (f"x{3 - j}",)
        else:
            own = (f"u{i}", f"u{i}", f"u{ii}", f"x{j}")
            conj = (f"u{ii}", f"u{ii}", f"u{i}", f"x{3 - j}")
        return own, conj

    gens = []
    algebra = list(compact_names_ops(compact))
    for kind, i, j in tags:
        own, conj = words(kind, i, j)
        f_poly = ctx.one()
        for nm in own:
            f_poly = f_poly * ctx.var(nm)
        # sign pattern fixed by bracket closure: the mixed cubics need the
        # opposite parity from the pure cubics (unique working assignment)
        sign = (-1) ** (i + j) if kind == "A" else (-1) ** (i + j + 1)
        gens.append(GeneratorInfo(f"{kind}{i}{j}", f_poly, OpMul(f_poly),
                                  OpScaled(Q(1, 27), OpCompose(recip, OpDeriv(own))),
                                  tags.index((kind, 3 - i, 3 - j))))
        algebra.append((f"P{kind}{i}{j}",
                        OpSum((OpMul(f_poly),
                               OpScaled(-Q(sign, 27), OpCompose(recip, OpDeriv(conj)))))))

    e_op = algebra[6 + tags.index(("A", 1, 1))][1]
    ebar_op = algebra[6 + tags.index(("A", 2, 2))][1]
    h_op = OpScaled(Q(1, 2), OpSum((hu, hx)))
    grading_op = OpSum((OpCompose(OpMul(x[0]), OpDeriv(("x1",))),
                        OpCompose(OpMul(x[1]), OpDeriv(("x2",))),
                        OpScalar(1)))

    def level_of(mono):
        du, dx = mono[0] + mono[1], mono[2] + mono[3]
        return dx if du == 3 * dx + 2 else None

    def level_basis(n):
        out = []
        for a in range(3 * n + 3):
            for b in range(n + 1):
                out.append((a, 3 * n + 2 - a, b, n - b))
        return sorted(out, reverse=True)

    def hw(n):
        return (3 * n + 2, 0, n, 0)

    return ModelSpec("g2", ctx, Q(1), "beta", grading_op, compact, gens,
                     algebra, (e_op, ebar_op, h_op), ("G2:2", "L0"),
                     level_of, level_basis, hw)


# --------------------------------------------------------------- verification

@dataclass
class BracketReport:
    rank: int
    closed: bool
    independent: bool
    stable: bool
    sl2_ok: bool
    structure_constants: dict
    failures: list


def _stacked_basis(model: ModelSpec, levels) -> list:
    out = []
    for n in levels:
        out.extend(model.level_basis(n))
    return out


def verify_brackets(model: ModelSpec, max_level: int) -> BracketReport:
    """Closure on levels 0..max_level-1, constants re-verified on level
    max_level, plus the distinguished raising/lowering commutator."""
    if max_level < 2:
        raise ValueError("need max_level >= 2")
    ops = [op for _, op in model.algebra_ops]
    small = _stacked_basis(model, range(max_level))
    rep = span_structure(ops, model.ctx, small)
    stable = False
    if rep.closed:
        extra = model.level_basis(max_level)
        stable = not verify_structure_constants(ops, model.ctx,
                                                rep.structure_constants, extra)
    sl2_ok = _check_sl2(model, small)
    failures = [(model.algebra_ops[i][0], model.algebra_ops[j][0])
                for i, j in rep.failures]
    return BracketReport(rep.rank, rep.closed, rep.independent, stable,
                         sl2_ok, rep.structure_constants, failures)


def _check_sl2(model: ModelSpec, basis) -> bool:
    e, ebar, h = model.sl2
    one = Q(1)
    for mono in basis:
        t = {mono: one}
        lhs = e.apply_terms(model.ctx, ebar.apply_terms(model.ctx, t))
        for m2, c in ebar.apply_terms(model.ctx, e.apply_terms(model.ctx, t)).items():
            v = lhs.get(m2, Q(0)) - c
            if v:
                lhs[m2] = v
            elif m2 in lhs:
                del lhs[m2]
        if lhs != h.apply_terms(model.ctx, t):
            return False
    return True


def check_degree_contract(model: ModelSpec, max_level: int) -> bool:
    """Compact ops preserve level, raising ops raise by 1, lowering ops
    lower by 1 (and kill level 0)."""
    for n in range(max_level + 1):
        for mono in model.level_basis(n):
            t = {mono: Q(1)}
            for _, op, _ in model.compact_ops:
                for m2 in op.apply_terms(model.ctx, t):
                    if model.level_of(m2) != n:
                        return False
            for g in model.generators:
                for m2 in g.raise_op.apply_terms(model.ctx, t):
                    if model.level_of(m2) != n + 1:
                        return False
                img = g.lower.apply_terms(model.ctx, t)
                if n == 0 and img:
                    return False
                for m2 in img:
                    if model.level_of(m2) != n - 1:
                        return False
    return True


# -------------------------------------------------------------- Gram solving

@dataclass
class GramReport:
    max_level: int
    bases: list
    grams: list        # per level: dict {(i, j): Fraction}, zero entries absent
    well_defined: bool
    symmetric: bool
    positive_definite: bool
    adjoint_ok: bool
    failures: list


def _level0_gram(model: ModelSpec, basis: list):
    """Solve the level-0 Gram from compact skew-pairing plus the
    highest-weight normalization."""
    k = len(basis)
    hw = basis.index(model.hw_monomial(0))
    unknowns = [(i, j) for i in range(k) for j in range(i, k)]

    def key(i, j):
        return (i, j) if i <= j else (j, i)

    equations, rhs = [], []
    for _, op, adj in model.compact_ops:
        mat = matrix_on_basis(op, model.ctx, basis)
        aop = model.compact_ops[adj][1]
        amat = matrix_on_basis(aop, model.ctx, basis)
        if mat.escaped or amat.escaped:
            return None
        for i in range(k):
            for j in range(k):
                # B(op s_i, s_j) - B(s_i, adj s_j) = 0
                eq = {}
                for (kk, col), c in mat.entries.items():
                    if col == i:
                        eq[key(kk, j)] = eq.get(key(kk, j), Q(0)) + c
                for (kk, col), c in amat.entries.items():
                    if col == j:
                        eq[key(i, kk)] = eq.get(key(i, kk), Q(0)) - c
                eq = {u: c for u, c in eq.items() if c}
                if eq:
                    equations.append(eq)
                    rhs.append(Q(0))
    equations.append({(hw, hw): Q(1)})
    rhs.append(Q(1))
    sol = solve_linear_system(equations, rhs, unknowns)
    if sol is None:
        return None
    gram = {}
    for (i, j), val in sol.items():
        if val:
            gram[(i, j)] = val
            if i != j:
                gram[(j, i)] = val
    return gram


def _apply_single(op: OperatorExpr, ctx, mono):
    return op.apply_terms(ctx, {mono: Q(1)})


def solve_gram(model: ModelSpec, max_level: int) -> GramReport:
    ctx = model.ctx
    bases = [model.level_basis(n) for n in range(max_level + 1)]
    failures = []
    g0 = _level0_gram(model, bases[0])
    if g0 is None:
        return GramReport(max_level, bases, [], False, False, False, False,
                          ["level-0 solve failed (inconsistent or underdetermined)"])
    grams = [g0]
    well_defined = True
    for n in range(1, max_level + 1):
        basis, prev = bases[n], bases[n - 1]
        prev_index = {m: i for i, m in enumerate(prev)}
        prev_set = prev_index
        gram_prev = grams[n - 1]

        def row_via(gen, mprime_idx):
            # B(m_i, .) with m_i = f_gen * prev[mprime_idx]
            row = {}
            for jj, mono in enumerate(basis):
                img = _apply_single(gen.lower, ctx, mono)
                val = Q(0)
                for m2, c in img.items():
                    kk = prev_index.get(m2)
                    if kk is not None:
                        val += c * gram_prev.get((mprime_idx, kk), Q(0))
                if val:
                    row[jj] = val
            return row

        gram = {}
        for i, mono in enumerate(basis):
            facts = _factorizations(model, mono, prev_set)
            if not facts:
                failures.append(f"level {n}: no factorization of {mono}")
                well_defined = False
                continue
            first = row_via(*facts[0])
            for alt in facts[1:]:
                if row_via(*alt) != first:
                    well_defined = False
                    failures.append(f"level {n}: factorizations disagree on {mono}")
                    break
            for jj, val in first.items():
                gram[(i, jj)] = val
        grams.append(gram)

    symmetric = all(
        all(g.get((j, i)) == val for (i, j), val in g.items()) for g in grams)
    positive_definite = all(_positive_definite(g, len(b))
                            for g, b in zip(grams, bases))
    adjoint_ok = _check_adjointness(model, bases, grams, failures)
    return GramReport(max_level, bases, grams, well_defined, symmetric,
                      positive_definite, adjoint_ok, failures)


def _factorizations(model: ModelSpec, mono, prev_index):
    out = []
    for gi, gen in enumerate(model.generators):
        (gexp,) = gen.f.terms  # single monomial
        mprime = tuple(a - b for a, b in zip(mono, gexp))
        if all(e >= 0 for e in mprime) and mprime in prev_index:
            out.append((gen, prev_index[mprime]))
    return out


def _positive_definite(gram: dict, dim: int) -> bool:
    rows = [dict() for _ in range(dim)]
    for (i, j), val in gram.items():
        rows[i][j] = val
    for kdx in range(dim):
        piv = rows[kdx].get(kdx, Q(0))
        if piv <= 0:
            return False
        for i in range(kdx + 1, dim):
            c = rows[i].pop(kdx, None)
            if c:
                f = c / piv
                for j, v in rows[kdx].items():
                    if j > kdx:
                        w = rows[i].get(j, Q(0)) - f * v
                        if w:
                            rows[i][j] = w
                        elif j in rows[i]:
                            del rows[i][j]
    return True


def _check_adjointness(model: ModelSpec, bases, grams, failures) -> bool:
    """Raising and lowering are mutually adjoint across consecutive Grams:
    F^T G_n = G_{n-1} L for every generator."""
    ok = True
    ctx = model.ctx
    for n in range(1, len(grams)):
        prev, cur = bases[n - 1], bases[n]
        prev_index = {m: i for i, m in enumerate(prev)}
        cur_index = {m: i for i, m in enumerate(cur)}
        for gen in model.generators:
            # F[k, i]: raise maps prev[i] to a single monomial
            raise_img = []
            for m in prev:
                img = _apply_single(gen.raise_op, ctx, m)
                (m2, c), = img.items()
                raise_img.append((cur_index[m2], c))
            # LHS entries: (i, j) -> sum_k F[k,i] G_n[k, j] = c_i * G_n[k0(i), j]
            lhs = {}
            for i, (k0, c) in enumerate(raise_img):
                for j in range(len(cur)):
                    v = grams[n].get((k0, j))
                    if v:
                        lhs[(i, j)] = c * v
            rhs = {}
            for j, m in enumerate(cur):
                img = _apply_single(gen.lower, ctx, m)
                for m2, c in img.items():
                    k = prev_index.get(m2)
                    if k is None:
                        continue
                    for i in range(len(prev)):
                        v = grams[n - 1].get((i, k))
                        if v:
                            w = rhs.get((i, j), Q(0)) + c * v
                            if w:
                                rhs[(i, j)] = w
                            elif (i, j) in rhs:
                                del rhs[(i, j)]
            if lhs != rhs:
                ok = False
                failures.append(f"adjointness fails for {gen.name} at level {n}")
    return ok


def model_hw_norm(model: ModelSpec, n: int, report: GramReport) -> Fraction:
    """Squared norm of the level-n highest-weight monomial divided by (n!)^2."""
    if n > report.max_level:
        raise ValueError("Gram data does not reach that level")
    i = report.bases[n].index(model.hw_monomial(n))
    return report.grams[n].get((i, i), Q(0)) / (factorial(n) ** 2)
