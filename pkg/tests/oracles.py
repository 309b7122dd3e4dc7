"""Independent reference implementations used to cross-check the package.

Everything here works on plain Python coefficient lists so that no
production code path is reused: polynomial arithmetic is schoolbook,
LFSRs run their recurrence by direct list indexing, orders are found by
iterated multiplication, and periods by scanning divisors.
"""


def mask_to_list(mask):
    """Coefficient list (index k = coefficient of x^k) for an integer mask."""
    out = []
    while mask:
        out.append(mask & 1)
        mask >>= 1
    return out


def list_to_mask(coeffs):
    mask = 0
    for k, c in enumerate(coeffs):
        if c & 1:
            mask |= 1 << k
    return mask


def _trim(coeffs):
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_mul(a, b):
    """Schoolbook product of two coefficient lists over GF(2)."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] ^= bj
    return _trim(out)


def poly_divmod(a, b):
    """Long division of coefficient lists; returns (quotient, remainder)."""
    assert b, "division by zero polynomial"
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 1)
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        q[shift] = 1
        for i, bi in enumerate(b):
            a[shift + i] ^= bi
    return _trim(q), _trim(a)


def poly_mulmod(a, b, m):
    return poly_divmod(poly_mul(a, b), m)[1]


def order_of_x(p):
    """Multiplicative order of x modulo p, by iterated multiply-and-reduce."""
    deg = len(p) - 1
    acc = poly_divmod([0, 1], p)[1]
    k = 1
    limit = (1 << deg) - 1
    while acc != [1]:
        acc = poly_divmod([0] + acc, p)[1]
        k += 1
        if k > limit:
            return None  # x is not invertible modulo p
    return k


def is_irreducible(p):
    """Trial division by every polynomial of degree 1 .. deg/2."""
    deg = len(p) - 1
    if deg < 1:
        return False
    for mask in range(2, 1 << (deg // 2 + 1)):
        d = mask_to_list(mask)
        if len(d) - 1 >= 1 and not poly_divmod(p, d)[1]:
            return False
    return True


def lfsr_run(charpoly, state, n):
    """Run a[k+L] = sum c_i a[k+i] by direct indexing; charpoly index k = c_k."""
    length = len(charpoly) - 1
    assert charpoly[length] == 1 and len(state) == length
    seq = list(state)
    for k in range(n - length):
        seq.append(sum(charpoly[i] * seq[k + i] for i in range(length)) % 2)
    return seq[:n]


def lfsr_min_period(charpoly, state):
    """Steps until the register window first returns to the initial state."""
    length = len(charpoly) - 1
    seq = list(state)
    t = 0
    while True:
        seq.append(sum(charpoly[i] * seq[t + i] for i in range(length)) % 2)
        t += 1
        if seq[t:t + length] == list(state):
            return t


def exact_period(bits, t):
    """Minimal period of the periodic extension of `bits`, given period t.

    Checks that t really is a period of the supplied window, then returns the
    smallest divisor of t that also works (the minimal period of a periodic
    sequence divides every period).
    """
    assert len(bits) >= t
    assert all(bits[i] == bits[i - t] for i in range(t, len(bits)))
    for d in sorted(k for k in range(1, t + 1) if t % k == 0):
        if all(bits[i] == bits[i % d] for i in range(t)):
            return d
    raise AssertionError("unreachable: t divides t")


def solve_scaled_congruence(ratio, target, mod):
    """Smallest n with n * ratio = target (mod mod), by exhaustive scan."""
    for n in range(mod):
        if n * ratio % mod == target:
            return n
    return None


def one_positions(bits):
    """Positions of the 1 bits, in order."""
    return [i for i, b in enumerate(bits) if b]
