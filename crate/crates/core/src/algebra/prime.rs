use std::fmt;

/// Residue modulo a prime `p`, stored reduced in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeFieldElement {
    residue: u64,
    modulus: u64,
}

impl PrimeFieldElement {
    /// Reduces `value` modulo `modulus`. The modulus is assumed prime; it is
    /// validated where field descriptors are built.
    pub fn new(value: i128, modulus: u64) -> Self {
        let m = modulus as i128;
        PrimeFieldElement {
            residue: value.rem_euclid(m) as u64,
            modulus,
        }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "arithmetic between different prime fields"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        let s = (self.residue as u128 + other.residue as u128) % self.modulus as u128;
        PrimeFieldElement { residue: s as u64, modulus: self.modulus }
    }

    pub fn neg(&self) -> Self {
        let r = if self.residue == 0 { 0 } else { self.modulus - self.residue };
        PrimeFieldElement { residue: r, modulus: self.modulus }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let p = (self.residue as u128 * other.residue as u128) % self.modulus as u128;
        PrimeFieldElement { residue: p as u64, modulus: self.modulus }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = PrimeFieldElement::new(1, self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Fermat inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(self.modulus - 2))
        }
    }
}

impl fmt::Display for PrimeFieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n.is_multiple_of(w) {
            return n == w;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
