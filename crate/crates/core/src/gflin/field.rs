use crate::error::{Error, Result};

/// The prime field GF(p) for an odd prime `p`.
///
/// Scalars are plain `u32` values kept reduced into `[0, p)`; every
/// arithmetic operation goes through the `Field` that owns the modulus, so a
/// computation session carries exactly one `Field` value around.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
}

impl Field {
    /// Largest modulus accepted. Products are formed in `u64`, so anything
    /// below 2^31 is safe; the cap is far above what desk-scale runs need.
    pub const MAX_P: u32 = 1 << 20;

    pub fn new(p: u32) -> Result<Self> {
        if !(3..=Self::MAX_P).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Field { p })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    /// Checks that another object lives over the same field.
    pub fn check_same(self, other: Field) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ModulusMismatch(self.p, other.p))
        }
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// `a + b * c`
    #[inline]
    pub fn mul_add(self, a: u32, b: u32, c: u32) -> u32 {
        ((a as u64 + b as u64 * c as u64) % self.p as u64) as u32
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.p;
        let mut acc = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(
            !a.is_multiple_of(self.p),
            "inverse of zero in GF({})",
            self.p
        );
        self.pow(a, (self.p - 2) as u64)
    }

    /// The element 1/2 = (p + 1) / 2.
    #[inline]
    pub fn half(self) -> u32 {
        self.p.div_ceil(2)
    }

    /// `(-1)^k` as a field element.
    #[inline]
    pub fn sign(self, k: usize) -> u32 {
        if k.is_multiple_of(2) {
            1
        } else {
            self.p - 1
        }
    }

    /// Binomial coefficient reduced mod p (exact for the small arguments used here).
    pub fn binomial(self, n: u64, k: u64) -> u32 {
        if k > n {
            return 0;
        }
        let mut num = 1u32;
        let mut den = 1u32;
        for i in 0..k {
            num = self.mul(num, self.reduce((n - i) as i64));
            den = self.mul(den, self.reduce((i + 1) as i64));
        }
        if den == 0 {
            // Lucas' theorem handles the case where p divides k!.
            let p = self.p as u64;
            let mut acc = 1u32;
            let (mut n, mut k) = (n, k);
            while n > 0 || k > 0 {
                acc = self.mul(acc, self.binomial(n % p, k % p));
                n /= p;
                k /= p;
            }
            return acc;
        }
        self.mul(num, self.inv(den))
    }

    /// Signed representative in `(-p/2, p/2]`, handy for printing.
    pub fn signed(self, a: u32) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
