"""Independent brute-force oracles used to pin expected values in the tests.

Everything here recomputes answers by exhaustive enumeration or by plain
rational arithmetic, deliberately avoiding the production code paths it is
used to check.
"""

import random
from fractions import Fraction
from itertools import combinations, permutations

from coverrees import Monomial, VariableUniverse


def brute_minimal_covers(graph):
    """All minimal vertex covers as a set of frozensets, by 2^V enumeration."""
    labels = graph.labels
    edges = graph.edges
    covers = []
    for r in range(len(labels) + 1):
        for combo in combinations(labels, r):
            chosen = set(combo)
            if all(a in chosen or b in chosen for a, b in edges):
                covers.append(frozenset(chosen))
    return {c for c in covers if not any(other < c for other in covers)}


def brute_maximal_independent_sets(graph):
    """All maximal independent sets as a set of frozensets, by 2^V enumeration."""
    labels = graph.labels
    edges = graph.edges
    independent = []
    for r in range(len(labels) + 1):
        for combo in combinations(labels, r):
            chosen = set(combo)
            if not any(a in chosen and b in chosen for a, b in edges):
                independent.append(frozenset(chosen))
    return {s for s in independent if not any(s < other for other in independent)}


def fraction_rank(rows):
    """Rank of an integer matrix via Gaussian elimination over Fraction."""
    matrix = [[Fraction(entry) for entry in row] for row in rows]
    rank = 0
    n_cols = len(matrix[0]) if matrix else 0
    pivot_row = 0
    for col in range(n_cols):
        pivot = None
        for r in range(pivot_row, len(matrix)):
            if matrix[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        matrix[pivot_row], matrix[pivot] = matrix[pivot], matrix[pivot_row]
        lead = matrix[pivot_row][col]
        for r in range(pivot_row + 1, len(matrix)):
            if matrix[r][col] != 0:
                factor = matrix[r][col] / lead
                matrix[r] = [a - factor * b for a, b in zip(matrix[r], matrix[pivot_row])]
        pivot_row += 1
        rank += 1
    return rank


def divides_exponents(small, large):
    return all(large.get(v, 0) >= e for v, e in small.items())


def colon_exponents(u, v):
    """Exponent dict of the colon u : v, i.e. u / gcd(u, v)."""
    result = {}
    for var, e in u.items():
        reduced = e - min(e, v.get(var, 0))
        if reduced:
            result[var] = reduced
    return result


def order_admits_linear_quotients(exponent_dicts):
    """Check the linear-quotient condition for one fixed generator order.

    Restates the definition directly on exponent dicts: for each j the colon
    ideal (f_1,...,f_{j-1}) : f_j must be generated by variables, which holds
    exactly when every colon(f_i, f_j) is divisible by some colon(f_l, f_j)
    of total degree one.
    """
    for j in range(1, len(exponent_dicts)):
        colons = [colon_exponents(exponent_dicts[i], exponent_dicts[j]) for i in range(j)]
        linear = [c for c in colons if sum(c.values()) == 1]
        for c in colons:
            if not any(divides_exponents(lin, c) for lin in linear):
                return False
    return True


def exhaustive_linear_quotients(monomials):
    """Try every permutation; return an admissible order or None."""
    exps = [dict(m.exps) for m in monomials]
    for perm in permutations(range(len(exps))):
        ordered = [exps[i] for i in perm]
        if order_admits_linear_quotients(ordered):
            return [monomials[i] for i in perm]
    return None


def random_monomial(rng, universe, max_degree=6):
    """Random monomial over the given universe with small exponents."""
    names = list(universe.all_vars)
    degree = rng.randint(0, max_degree)
    exps = {}
    for _ in range(degree):
        name = rng.choice(names)
        exps[name] = exps.get(name, 0) + 1
    return universe.monomial(exps)


def random_universe(rng, max_s=5, max_y=3, with_t=False):
    s_count = rng.randint(1, max_s)
    y_count = rng.randint(0, max_y)
    s_vars = tuple(f"x{i}" for i in range(1, s_count + 1))
    y_vars = tuple(f"y{j}" for j in range(1, y_count + 1))
    return VariableUniverse(s_vars, y_vars, "t" if with_t else None)


def random_graph(rng, max_vertices=9, edge_probability=0.45):
    """Random labelled graph, possibly disconnected, possibly edgeless."""
    from coverrees import build_graph

    n = rng.randint(1, max_vertices)
    labels = [f"x{i}" for i in range(1, n + 1)]
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_probability:
                edges.append((labels[i], labels[j]))
    return build_graph(labels, edges)
