//! Exact finite-field arithmetic GF(q) for small prime powers, as lookup
//! tables. Elements are encoded as integers `0..q` whose base-p digits,
//! read low-degree first, are the coefficients of the element's polynomial
//! representation.

use crate::error::{Error, Result};

/// Largest supported field order. Everything in this crate needs q <= 5 for
/// constructions and q <= 9 for test suites; the cap keeps table sizes sane.
pub const MAX_FIELD_ORDER: u32 = 64;

/// Arithmetic tables for GF(q), q = p^h.
///
/// Immutable after construction; all operations are pure table lookups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTable {
    q: u32,
    p: u32,
    h: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    poly: Vec<u32>,
}

/// Factor q as p^h for prime p, h >= 1.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 0;
    for d in 2..=q {
        if q % d == 0 {
            p = d;
            break;
        }
    }
    let mut rest = q;
    let mut h = 0;
    while rest % p == 0 {
        rest /= p;
        h += 1;
    }
    if rest == 1 {
        Some((p, h))
    } else {
        None
    }
}

// Dense polynomials over GF(p), coefficients low-degree first.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = (r[dr] * lead_inv) % p;
        if factor != 0 {
            for i in 0..=db {
                let idx = dr - db + i;
                r[idx] = (r[idx] + p - factor * b[i] % p) % p;
            }
        }
        r.pop();
        while r.len() > db && *r.last().unwrap() == 0 {
            r.pop();
        }
    }
    r
}

fn mod_inv(a: u32, p: u32) -> u32 {
    (1..p).find(|&b| a * b % p == 1).expect("nonzero element mod prime")
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let h = f.len() - 1;
    for d in 1..=h / 2 {
        // all monic divisor candidates of degree d
        let count = (p as u64).pow(d as u32);
        for k in 0..count {
            let mut g = vec![0u32; d + 1];
            let mut kk = k;
            for c in g.iter_mut().take(d) {
                *c = (kk % p as u64) as u32;
                kk /= p as u64;
            }
            g[d] = 1;
            let r = poly_rem(f, &g, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least monic irreducible polynomial of degree h over
/// GF(p), coefficient vectors compared low-degree first.
fn least_irreducible(p: u32, h: u32) -> Vec<u32> {
    let count = (p as u64).pow(h);
    for k in 0..count {
        let mut f = vec![0u32; h as usize + 1];
        // c_0 is the most significant digit of k so ascending k walks the
        // coefficient vectors in low-degree-first lexicographic order
        let mut kk = k;
        for i in (0..h as usize).rev() {
            f[i] = (kk % p as u64) as u32;
            kk /= p as u64;
        }
        f[h as usize] = 1;
        if is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("an irreducible polynomial of degree h over GF(p) always exists")
}

impl FieldTable {
    /// Build the tables for GF(q). Errors if q is not a prime power or
    /// exceeds [`MAX_FIELD_ORDER`].
    pub fn new(q: u32) -> Result<Self> {
        let (p, h) = prime_power(q)
            .ok_or_else(|| Error::parameter(format!("{} is not a prime power", q)))?;
        if q > MAX_FIELD_ORDER {
            return Err(Error::parameter(format!(
                "field order {} exceeds the supported maximum {}",
                q, MAX_FIELD_ORDER
            )));
        }
        let poly = if h == 1 {
            vec![0, 1] // x, a placeholder: arithmetic is plain mod p
        } else {
            least_irreducible(p, h)
        };

        let coeffs = |e: u32| -> Vec<u32> {
            let mut v = vec![0u32; h as usize];
            let mut e = e;
            for c in v.iter_mut() {
                *c = e % p;
                e /= p;
            }
            v
        };
        let encode = |v: &[u32]| -> u32 {
            let mut e = 0;
            for (i, &c) in v.iter().enumerate().take(h as usize) {
                e += c * p.pow(i as u32);
            }
            e
        };

        let qs = q as usize;
        let mut add = vec![0u32; qs * qs];
        let mut mul = vec![0u32; qs * qs];
        for a in 0..q {
            let ca = coeffs(a);
            for b in 0..q {
                let cb = coeffs(b);
                let sum: Vec<u32> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&sum);

                let mut prod = vec![0u32; 2 * h as usize - 1];
                for (i, &x) in ca.iter().enumerate() {
                    for (j, &y) in cb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let reduced = if h == 1 { prod } else { poly_rem(&prod, &poly, p) };
                let mut full = vec![0u32; h as usize];
                full[..reduced.len()].copy_from_slice(&reduced);
                mul[(a * q + b) as usize] = encode(&full);
            }
        }

        let mut inv = vec![0u32; qs];
        for a in 1..q {
            inv[a as usize] = (1..q)
                .find(|&b| mul[(a * q + b) as usize] == 1)
                .expect("every nonzero field element has an inverse");
        }

        Ok(FieldTable { q, p, h, add, mul, inv, poly })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.h
    }

    /// Coefficients of the defining polynomial, low-degree first.
    pub fn defining_poly(&self) -> &[u32] {
        &self.poly
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.q && b < self.q);
        self.add[(a * self.q + b) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        debug_assert!(a < self.q && b < self.q);
        self.mul[(a * self.q + b) as usize]
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0 && a < self.q);
        self.inv[a as usize]
    }

    /// Evaluate a polynomial (coefficients low-degree first) at x by
    /// Horner's scheme.
    pub fn eval_poly(&self, coeffs: &[u32], x: u32) -> Result<u32> {
        if x >= self.q {
            return Err(Error::parameter(format!(
                "evaluation point {} out of range for GF({})",
                x, self.q
            )));
        }
        if let Some(&bad) = coeffs.iter().find(|&&c| c >= self.q) {
            return Err(Error::parameter(format!(
                "coefficient {} out of range for GF({})",
                bad, self.q
            )));
        }
        let mut acc = 0;
        for &c in coeffs.iter().rev() {
            acc = self.add(self.mul(acc, x), c);
        }
        Ok(acc)
    }

    /// Dot product of two element vectors.
    pub fn dot(&self, u: &[u32], v: &[u32]) -> u32 {
        debug_assert_eq!(u.len(), v.len());
        let mut acc = 0;
        for (&a, &b) in u.iter().zip(v) {
            acc = self.add(acc, self.mul(a, b));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf3_is_mod_3() {
        let f = FieldTable::new(3).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(f.add(a, b), (a + b) % 3);
                assert_eq!(f.mul(a, b), (a * b) % 3);
            }
        }
        assert_eq!((f.characteristic(), f.extension_degree()), (3, 1));
    }

    #[test]
    fn gf4_defining_poly_and_products() {
        // lexicographically least monic irreducible of degree 2 over GF(2)
        // is x^2 + x + 1; under the digit encoding 2 <-> x, 3 <-> x + 1.
        let f = FieldTable::new(4).unwrap();
        assert_eq!(f.defining_poly(), &[1, 1, 1]);
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.mul(3, 3), 2);
    }

    #[test]
    fn non_prime_power_rejected() {
        let err = FieldTable::new(6).unwrap_err();
        assert!(err.to_string().contains("not a prime power"), "{}", err);
        assert!(FieldTable::new(1).is_err());
        assert!(FieldTable::new(0).is_err());
        assert!(FieldTable::new(12).is_err());
    }

    #[test]
    fn oversized_order_rejected() {
        assert!(FieldTable::new(121).is_err());
        assert!(FieldTable::new(64).is_ok());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2u32, 3, 4, 5, 7, 8, 9] {
            let f = FieldTable::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.mul(a, 0), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1, "inverse in GF({})", q);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "distributivity in GF({})",
                            q
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn eval_poly_examples() {
        let f3 = FieldTable::new(3).unwrap();
        assert_eq!(f3.eval_poly(&[1, 2, 1], 2).unwrap(), 0);
        let f4 = FieldTable::new(4).unwrap();
        assert_eq!(f4.eval_poly(&[0, 0, 1], 2).unwrap(), 3);
        for q in [2u32, 5, 9] {
            let f = FieldTable::new(q).unwrap();
            for c in 0..q {
                assert_eq!(f.eval_poly(&[c], q - 1).unwrap(), c);
            }
        }
    }

    #[test]
    fn eval_poly_range_errors() {
        let f = FieldTable::new(4).unwrap();
        assert!(f.eval_poly(&[0, 1], 4).is_err());
        assert!(f.eval_poly(&[4], 0).is_err());
    }

    #[test]
    fn eval_poly_matches_power_sum() {
        // naive sum of c_i * x^i, powers by repeated multiplication
        for q in [2u32, 3, 4, 5, 7, 8, 9] {
            let f = FieldTable::new(q).unwrap();
            let mut coeffs = vec![0u32; 4];
            loop {
                for x in 0..q {
                    let mut naive = 0;
                    let mut xp = 1;
                    for &c in &coeffs {
                        naive = f.add(naive, f.mul(c, xp));
                        xp = f.mul(xp, x);
                    }
                    assert_eq!(f.eval_poly(&coeffs, x).unwrap(), naive);
                }
                // odometer over all degree-<=3 coefficient vectors
                let mut i = 0;
                while i < coeffs.len() {
                    coeffs[i] += 1;
                    if coeffs[i] < q {
                        break;
                    }
                    coeffs[i] = 0;
                    i += 1;
                }
                if i == coeffs.len() {
                    break;
                }
            }
        }
    }
}
