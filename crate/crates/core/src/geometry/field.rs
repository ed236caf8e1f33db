//! Table-driven arithmetic in GF(q) for the small orders used here.
//!
//! Element `i` is the polynomial whose base-`p` digits are its coefficients
//! (constant term first), reduced modulo a fixed irreducible polynomial.

use crate::error::{Error, Result};

/// Supported orders with `(p, e, low coefficients of the monic modulus)`.
/// GF(9) = GF(3)[t]/(t^2 + 1), whose primitive element is t + 1.
const TABLE: &[(usize, usize, usize, &[usize])] = &[
    (2, 2, 1, &[0]),
    (3, 3, 1, &[0]),
    (4, 2, 2, &[1, 1]),
    (5, 5, 1, &[0]),
    (7, 7, 1, &[0]),
    (8, 2, 3, &[1, 1, 0]),
    (9, 3, 2, &[1, 0]),
    (16, 2, 4, &[1, 1, 0, 0]),
];

/// Finite field with precomputed addition and multiplication tables.
#[derive(Debug, Clone)]
pub struct GField {
    q: usize,
    p: usize,
    e: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    neg: Vec<usize>,
    inv: Vec<usize>,
    primitive: usize,
}

impl GField {
    pub fn new(q: usize) -> Result<Self> {
        let &(_, p, e, modulus) =
            TABLE.iter().find(|row| row.0 == q).ok_or(Error::UnsupportedField(q))?;
        let digits = |mut x: usize| {
            let mut d = vec![0usize; e];
            for c in d.iter_mut() {
                *c = x % p;
                x /= p;
            }
            d
        };
        let encode = |d: &[usize]| d.iter().rev().fold(0, |acc, &c| acc * p + c);
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&sum);
                // schoolbook product, then reduce t^k for k >= e using
                // t^e = -(m_0 + m_1 t + ... )
                let mut prod = vec![0usize; 2 * e];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for k in (e..2 * e).rev() {
                    let c = prod[k];
                    if c == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    for (i, &m) in modulus.iter().enumerate() {
                        prod[k - e + i] = (prod[k - e + i] + (p - c) * m) % p;
                    }
                }
                mul[a * q + b] = encode(&prod[..e]);
            }
        }
        let neg = (0..q).map(|a| (0..q).find(|&b| add[a * q + b] == 0).unwrap()).collect();
        let inv = (0..q)
            .map(|a| if a == 0 { 0 } else { (1..q).find(|&b| mul[a * q + b] == 1).unwrap_or(0) })
            .collect();
        let mut field = GField { q, p, e, add, mul, neg, inv, primitive: 0 };
        field.verify_axioms()?;
        field.primitive = (2..q)
            .chain(std::iter::once(1))
            .find(|&a| field.multiplicative_order(a) == q - 1)
            .ok_or(Error::UnsupportedField(q))?;
        Ok(field)
    }

    fn verify_axioms(&self) -> Result<()> {
        let q = self.q;
        let bad = || Error::UnsupportedField(q);
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a || self.add(a, self.neg(a)) != 0 {
                return Err(bad());
            }
            if a != 0 && self.mul(a, self.inv[a]) != 1 {
                return Err(bad());
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(bad());
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                        || self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c))
                    {
                        return Err(bad());
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.e
    }

    /// Smallest-index element generating the multiplicative group.
    pub fn primitive(&self) -> usize {
        self.primitive
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.inv[a])
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, _| self.mul(acc, a))
    }

    pub fn multiplicative_order(&self, a: usize) -> usize {
        if a == 0 {
            return 0;
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Nonzero squares.
    pub fn is_square(&self, a: usize) -> bool {
        a != 0 && (1..self.q).any(|x| self.mul(x, x) == a)
    }

    /// `x -> x^p`.
    pub fn frobenius(&self, a: usize) -> usize {
        self.pow(a, self.p)
    }
}
