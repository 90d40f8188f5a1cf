"""Independent reference computations shared by the module and acceptance tests.

Coefficient rows below are transcribed by hand from the printed charge-splitting
tables as (α+α′, β, γ, β′, γ′); α and α′ always appear together with coefficient 1.
"""

from fractions import Fraction as F

# name: (row, mass); the proton's γ′ uses U = 1/2 (3/4 - 1/4 = 1/2) instead of the printed 2
CHARGE_F12 = {
    "Xi-": ((1, -1, F(1, 2), 1, F(1, 2)), F("1320.8")),
    "Xi0": ((1, -1, F(1, 2), 0, 2), F("1314.3")),
    "Sigma-": ((1, 0, 2, 1, F(1, 2)), F("1197.1")),
    "Sigma0": ((1, 0, 2, 0, 2), F("1192.4")),
    "Sigma+": ((1, 0, 2, -1, F(1, 2)), F("1189.4")),
    "Lambda": ((1, 0, 0, 0, 0), F("1115.4")),
    "N": ((1, 1, F(1, 2), 0, 2), F("939.5")),
    "P": ((1, 1, F(1, 2), -1, F(1, 2)), F("938.3")),
}
# mesons: β = 0, so rows are (α+α′, γ, β′, γ′)
CHARGE_B0 = {
    "eta": ((1, 0, 0, 0), F("548.7")),
    "K-": ((1, F(1, 2), 1, F(1, 2)), F("493.8")),
    "K0bar": ((1, F(1, 2), 0, F(3, 4)), F("498.0")),
    "K0": ((1, F(1, 2), 0, F(3, 4)), F("498.0")),
    "K+": ((1, F(1, 2), -1, F(1, 2)), F("493.8")),
    "pi-": ((1, 2, 1, F(7, 4)), F("139.6")),
    "pi0": ((1, 2, 0, 2), F("135.0")),
    "pi+": ((1, 2, -1, F(7, 4)), F("139.6")),
}
CHARGE_B1 = {
    "phi": ((1, 0, 0, 0), F("782")),
    "K*-": ((1, F(1, 2), 1, F(1, 2)), F("891.66")),
    "K*0bar": ((1, F(1, 2), 0, F(3, 4)), F("895.81")),
    "K*0": ((1, F(1, 2), 0, F(3, 4)), F("895.81")),
    "K*+": ((1, F(1, 2), -1, F(1, 2)), F("891.66")),
    "rho-": ((1, 2, 1, F(7, 4)), F("766.5")),
    "rho0": ((1, 2, 0, 2), F("769")),
    "rho+": ((1, 2, -1, F(7, 4)), F("766.5")),
}
# multiplet grouping used for m₀: mean over multiplets of the multiplet mean
GROUPS = {
    "F12": [["Xi-", "Xi0"], ["Sigma-", "Sigma0", "Sigma+"], ["Lambda"], ["N", "P"]],
    "B0": [["eta"], ["K-", "K0bar"], ["K0", "K+"], ["pi-", "pi0", "pi+"]],
    "B1": [["phi"], ["K*-", "K*0bar"], ["K*0", "K*+"], ["rho-", "rho0", "rho+"]],
}
TABLES = {"F12": (CHARGE_F12, False), "B0": (CHARGE_B0, True), "B1": (CHARGE_B1, True)}


def solve_exact(M, v):
    """Gauss–Jordan elimination over Fractions."""
    n = len(M)
    A = [list(row) + [v[i]] for i, row in enumerate(M)]
    for c in range(n):
        piv = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return [A[i][n] for i in range(n)]


def normal_equations(rows, target):
    """Exact least squares via AᵀA x = Aᵀb; returns (x, residuals)."""
    k = len(rows[0])
    ata = [[sum(F(r[i]) * F(r[j]) for r in rows) for j in range(k)] for i in range(k)]
    atb = [sum(F(r[i]) * t for r, t in zip(rows, target)) for i in range(k)]
    x = solve_exact(ata, atb)
    res = [t - sum(F(c) * xi for c, xi in zip(r, x)) for r, t in zip(rows, target)]
    return x, res


def table_oracle(octet: str):
    """(m0, x, residuals-by-name) for the printed charge table of ``octet``."""
    table, quadratic = TABLES[octet]
    val = {name: (m * m if quadratic else m) for name, (_, m) in table.items()}
    means = [sum(val[n] for n in grp) / len(grp) for grp in GROUPS[octet]]
    m0 = sum(means) / len(means)
    names = list(table)
    rows = [table[n][0] for n in names]
    x, res = normal_equations(rows, [val[n] - m0 for n in names])
    return m0, x, dict(zip(names, res))
