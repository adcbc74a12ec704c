"""Independent reference computations built on sympy, used to freeze expected values.

None of these share code with the package's own elimination routines.
"""
import itertools

import sympy


def table_tensor(A):
    """Dense structure constants ``T[i][j][k]`` (0-based) as sympy Rationals."""
    n = A.dim
    T = [[[sympy.Integer(0)] * n for _ in range(n)] for _ in range(n)]
    for (i, j), terms in A.products.items():
        for k, c in terms:
            T[i - 1][j - 1][k - 1] = sympy.Rational(c.numerator, c.denominator)
    return T


def mult(T, x, y):
    n = len(T)
    return [sum(x[i] * y[j] * T[i][j][k] for i in range(n) for j in range(n)) for k in range(n)]


def span_dim(vectors, n):
    if not vectors:
        return 0
    return sympy.Matrix(vectors).rank()


def power_dims(A):
    """``dim A^i`` from the two-sided recursion, with bases kept as sympy row spaces."""
    n = A.dim
    T = table_tensor(A)
    eye = sympy.eye(n)
    powers = [[list(eye.row(i)) for i in range(n)]]
    dims = [n]
    while dims[-1] and len(dims) <= n + 1:
        i = len(powers)
        vecs = []
        for k in range(1, i + 1):
            for u in powers[k - 1]:
                for v in powers[i - k]:
                    w = mult(T, u, v)
                    if any(w):
                        vecs.append(w)
        if vecs:
            rs = sympy.Matrix(vecs).rowspace()
            basis = [list(r) for r in rs]
        else:
            basis = []
        if len(basis) == dims[-1]:
            break
        powers.append(basis)
        dims.append(len(basis))
    return tuple(dims)


def annihilator_dims(A):
    n = A.dim
    T = table_tensor(A)
    xs = sympy.symbols(f"x0:{n}")
    eye = [[int(i == j) for j in range(n)] for i in range(n)]
    left_eqs = [c for j in range(n) for c in mult(T, xs, eye[j])]
    right_eqs = [c for j in range(n) for c in mult(T, eye[j], xs)]

    def null_dim(eqs):
        eqs = [e for e in eqs if e != 0]
        if not eqs:
            return n
        M = sympy.Matrix([[sympy.diff(e, x) for x in xs] for e in eqs])
        return len(M.nullspace())

    comm = []
    for i, j in itertools.combinations(range(n), 2):
        d = [a - b for a, b in zip(mult(T, eye[i], eye[j]), mult(T, eye[j], eye[i]))]
        if any(d):
            comm.append(d)
    return {
        "left": null_dim(left_eqs),
        "right": null_dim(right_eqs),
        "two_sided": null_dim(left_eqs + right_eqs),
        "commutator": span_dim(comm, n),
    }


def jordan_blocks(rows):
    """Block sizes of a nilpotent matrix from sympy's Jordan form."""
    M = sympy.Matrix(rows)
    n = M.shape[0]
    if n == 0:
        return ()
    _, J = M.jordan_form()
    sizes, run = [], 1
    for i in range(n - 1):
        if J[i, i + 1] != 0:
            run += 1
        else:
            sizes.append(run)
            run = 1
    sizes.append(run)
    return tuple(sorted(sizes, reverse=True))


def generic_profile(A):
    """Jordan profile of ``L_x`` for a fully symbolic ``x``.

    Ranks of powers are maximal at a generic element, so this is C(A) whenever
    the generic element lies outside A^2 (always, for A != A^2).
    """
    n = A.dim
    T = table_tensor(A)
    xs = sympy.symbols(f"x0:{n}")
    eye = [[int(i == j) for j in range(n)] for i in range(n)]
    L = sympy.Matrix([mult(T, xs, eye[j]) for j in range(n)]).T
    ranks = [n]
    P = sympy.eye(n)
    while ranks[-1]:
        P = (L * P).expand()
        ranks.append(P.rank(iszerofunc=lambda e: sympy.expand(e) == 0))
        if len(ranks) > n + 1:
            raise AssertionError("not nilpotent")
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))] + [0]
    parts = []
    for k in range(len(at_least) - 1, 0, -1):
        parts += [k] * (at_least[k - 1] - at_least[k])
    return tuple(parts)


def associator_defect_triples(A):
    n = A.dim
    T = table_tensor(A)
    eye = [[int(i == j) for j in range(n)] for i in range(n)]
    bad = []
    for a, b, c in itertools.product(range(n), repeat=3):
        lhs = mult(T, mult(T, eye[a], eye[b]), eye[c])
        rhs = mult(T, eye[a], mult(T, eye[b], eye[c]))
        if lhs != rhs:
            bad.append((a + 1, b + 1, c + 1))
    return bad
