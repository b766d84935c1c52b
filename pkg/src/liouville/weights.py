"""GL(n) weights: dominance, Weyl dimension formula, duality, Pieri rule.

A weight is a plain tuple of n integers. Dominance (weakly decreasing) is
checked where an operation requires it, never baked into a type, since
Bott's algorithm needs arbitrary integer weights.
"""

from math import prod


def is_dominant(w):
    return all(w[i] >= w[i + 1] for i in range(len(w) - 1))


def check_weight(w):
    w = tuple(int(x) for x in w)
    if not w:
        raise ValueError("weight must have positive length")
    return w


def weyl_dim(lam):
    """Dimension of the irreducible GL(n) representation of highest weight lam.

    prod over i<j of (lam_i - lam_j + j - i)/(j - i); exact integer.
    """
    lam = check_weight(lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    n = len(lam)
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= lam[i] - lam[j] + j - i
            den *= j - i
    d, r = divmod(num, den)
    assert r == 0
    return d


def dualize(lam):
    """Highest weight of the dual representation: reverse and negate."""
    lam = check_weight(lam)
    return tuple(-x for x in reversed(lam))


def pad(lam, n):
    """Pad a partition with zeros to length n; error if it does not fit."""
    lam = tuple(lam)
    if len(lam) > n:
        if any(lam[n:]):
            raise ValueError(f"weight {lam} does not fit in {n} rows")
        return lam[:n]
    return lam + (0,) * (n - len(lam))


def pieri_sym(lam, k):
    """Decompose Sigma^lam tensor S^k (Pieri rule).

    Returns a dict {mu: 1} over all mu obtained from lam by adding k boxes,
    no two in the same column. All multiplicities are 1.
    """
    lam = check_weight(lam)
    if not is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    if any(x < 0 for x in lam):
        raise ValueError(f"Pieri rule needs a Young diagram, got {lam}")
    if k < 1:
        raise ValueError("k must be a positive integer")
    n = len(lam)
    out = {}

    def place(i, remaining, mu):
        if remaining == 0:
            out[tuple(mu)] = 1
            return
        if i == n:
            return
        # horizontal strip: mu_i <= lam_{i-1}
        upper = lam[i - 1] if i > 0 else lam[i] + remaining
        hi = min(upper - lam[i], remaining)
        for add in range(hi, -1, -1):
            mu[i] = lam[i] + add
            place(i + 1, remaining - add, mu)
        mu[i] = lam[i]

    place(0, k, list(lam))
    return out


def sym_dim(n, d):
    """dim S^d(C^n), as a weight computation."""
    return weyl_dim(pad((d,), n)) if d > 0 else 1


def isotypic_to_json(terms):
    """IsotypicSum as a JSON-ready list of {weight, multiplicity} records."""
    return [
        {"weight": list(w), "multiplicity": m}
        for w, m in sorted(terms.items(), reverse=True)
    ]


def isotypic_dim(terms):
    return sum(m * weyl_dim(w) for w, m in terms.items())
