"""GF(2^s) arithmetic with log/antilog tables.

Elements are ints whose bits are polynomial-basis coefficients. The
primitive polynomial for each degree is fixed so that every construction
built on top of a field is reproducible bit for bit.
"""

from __future__ import annotations

# x^s + ... + 1 as bit patterns; x (= 2) is primitive for each.
PRIMITIVE_POLYNOMIALS: dict[int, int] = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


class GaloisField:
    """The field GF(2^s).

    ``alpha`` is the class of ``x`` modulo the primitive polynomial (for
    ``s = 1`` it is 1). ``exp[i] = alpha**i`` for ``0 <= i < 2*(q-1)``.
    """

    def __init__(self, s: int, modulus: int | None = None) -> None:
        if modulus is None:
            if s not in PRIMITIVE_POLYNOMIALS:
                raise ValueError(f"no primitive polynomial on file for degree {s}")
            modulus = PRIMITIVE_POLYNOMIALS[s]
        if modulus.bit_length() != s + 1:
            raise ValueError("modulus degree does not match s")
        self.s = s
        self.q = 1 << s
        self.modulus = modulus
        order = self.q - 1
        self.exp = [0] * (2 * order)
        self.log = [-1] * self.q
        value = 1
        for i in range(order):
            if self.log[value] != -1:
                raise ValueError(f"modulus {modulus:#b} is not primitive")
            self.exp[i] = value
            self.log[value] = i
            value = self._mul_raw(value, 2 if s > 1 else 1)
        if value != 1:
            raise ValueError(f"modulus {modulus:#b} is not primitive")
        for i in range(order, 2 * order):
            self.exp[i] = self.exp[i - order]

    def _mul_raw(self, a: int, b: int) -> int:
        out = 0
        while b:
            if b & 1:
                out ^= a
            b >>= 1
            a <<= 1
            if a >> self.s:
                a ^= self.modulus
        return out

    def elements(self) -> range:
        return range(self.q)

    @staticmethod
    def add(a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[self.log[a] + self.log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse")
        return self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e > 0 else 1
        return self.exp[(self.log[a] * e) % (self.q - 1)]

    def alpha_pow(self, i: int) -> int:
        return self.exp[i % (self.q - 1)]

    def dot(self, u, v) -> int:
        acc = 0
        for a, b in zip(u, v):
            acc ^= self.mul(a, b)
        return acc

    def trace(self, a: int, sub_degree: int) -> int:
        """Relative trace to the subfield GF(2^sub_degree).

        Requires ``sub_degree`` to divide ``s``; returns an element of this
        field that lies in the subfield.
        """
        if self.s % sub_degree:
            raise ValueError("subfield degree must divide the field degree")
        q_sub = 1 << sub_degree
        acc, term = 0, a
        for _ in range(self.s // sub_degree):
            acc ^= term
            term = self.pow(term, q_sub)
        return acc

    def __repr__(self) -> str:
        return f"GaloisField(2^{self.s}, modulus={self.modulus:#b})"
