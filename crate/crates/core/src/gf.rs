//! Minimal arithmetic for tiny finite fields GF(p^k), enough to build Paley
//! graphs on prime-power orders. Elements are encoded as integers in
//! `0..q`: the element with base-p digits `c_0, c_1, ...` represents the
//! polynomial `c_0 + c_1 x + ...` over GF(p).

use alloc::vec;
use alloc::vec::Vec;

/// GF(p^k) with a fixed irreducible modulus, found by exhaustive search in
/// ascending integer encoding (so the choice is deterministic).
pub struct Field {
    p: usize,
    k: usize,
    q: usize,
    /// Non-leading coefficients of the monic irreducible modulus, encoded
    /// like elements; empty for prime fields.
    modulus: Vec<usize>,
}

impl Field {
    /// Builds GF(q), or `None` if `q` is not a prime power.
    pub fn new(q: usize) -> Option<Field> {
        let (p, k) = prime_power(q)?;
        if k == 1 {
            return Some(Field {
                p,
                k,
                q,
                modulus: Vec::new(),
            });
        }
        // smallest monic irreducible of degree k, by ascending encoding of
        // the non-leading coefficient vector
        for enc in 0..q {
            let coeffs = digits(enc, p, k);
            if is_irreducible(&coeffs, p) {
                return Some(Field {
                    p,
                    k,
                    q,
                    modulus: coeffs,
                });
            }
        }
        unreachable!("an irreducible polynomial of every degree exists")
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.zip(a, b, |x, y| (x + y) % self.p)
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.zip(a, b, |x, y| (x + self.p - y) % self.p)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        if self.k == 1 {
            return a * b % self.p;
        }
        // schoolbook product of coefficient vectors, reduced by the modulus
        let da = digits(a, self.p, self.k);
        let db = digits(b, self.p, self.k);
        let mut prod = vec![0usize; 2 * self.k - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // x^k = -modulus (monic), eliminate top coefficients downwards
        for top in (self.k..prod.len()).rev() {
            let c = prod[top];
            if c != 0 {
                prod[top] = 0;
                for (i, &mc) in self.modulus.iter().enumerate() {
                    let t = top - self.k + i;
                    prod[t] = (prod[t] + self.p * self.p - c * mc % (self.p * self.p)) % self.p;
                }
            }
        }
        encode(&prod[..self.k], self.p)
    }

    fn zip(&self, a: usize, b: usize, f: impl Fn(usize, usize) -> usize) -> usize {
        if self.k == 1 {
            return f(a, b);
        }
        let da = digits(a, self.p, self.k);
        let db = digits(b, self.p, self.k);
        let out: Vec<usize> = da.iter().zip(&db).map(|(&x, &y)| f(x, y)).collect();
        encode(&out, self.p)
    }
}

fn prime_power(q: usize) -> Option<(usize, usize)> {
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
    let mut k = 0;
    while rest > 1 {
        if rest % p != 0 {
            return None;
        }
        rest /= p;
        k += 1;
    }
    Some((p, k))
}

fn digits(mut v: usize, p: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for d in out.iter_mut() {
        *d = v % p;
        v /= p;
    }
    out
}

fn encode(coeffs: &[usize], p: usize) -> usize {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Is the monic polynomial `x^k + sum(coeffs[i] x^i)` irreducible over GF(p)?
/// Checked by trial division with every monic polynomial of degree 1..=k/2.
fn is_irreducible(coeffs: &[usize], p: usize) -> bool {
    let k = coeffs.len();
    let mut f: Vec<usize> = coeffs.to_vec();
    f.push(1);
    for d in 1..=k / 2 {
        let count = p.pow(d as u32);
        for enc in 0..count {
            let mut g = digits(enc, p, d);
            g.push(1);
            if poly_divides(&g, &f, p) {
                return false;
            }
        }
    }
    true
}

/// Does monic `g` divide monic `f` over GF(p)? Plain long division.
fn poly_divides(g: &[usize], f: &[usize], p: usize) -> bool {
    let mut rem: Vec<usize> = f.to_vec();
    let dg = g.len() - 1;
    while rem.len() > dg {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - dg;
            for (i, &gc) in g.iter().enumerate() {
                let idx = shift + i;
                rem[idx] = (rem[idx] + p * p - lead * gc % (p * p)) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_power_detection() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(25), Some((5, 2)));
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(21), None);
    }

    #[test]
    fn gf9_tables() {
        let f = Field::new(9).unwrap();
        // additive group: x + x + x = 0 in characteristic 3
        for a in 0..9 {
            assert_eq!(f.add(f.add(a, a), a), 0);
            assert_eq!(f.sub(a, a), 0);
        }
        // multiplicative group is cyclic of order 8; every nonzero element
        // has a multiplicative inverse
        for a in 1..9 {
            assert!((1..9).any(|b| f.mul(a, b) == 1), "no inverse for {a}");
        }
        // exactly (q-1)/2 = 4 distinct nonzero squares
        let mut squares: alloc::vec::Vec<usize> = (1..9).map(|x| f.mul(x, x)).collect();
        squares.sort_unstable();
        squares.dedup();
        assert_eq!(squares.len(), 4);
    }

    #[test]
    fn gf25_gf49_square_counts() {
        for q in [25usize, 49] {
            let f = Field::new(q).unwrap();
            let mut squares: alloc::vec::Vec<usize> = (1..q).map(|x| f.mul(x, x)).collect();
            squares.sort_unstable();
            squares.dedup();
            assert_eq!(squares.len(), (q - 1) / 2);
            // -1 must be a square when q ≡ 1 (mod 4): makes Paley undirected
            let minus_one = f.sub(0, 1);
            assert!(squares.contains(&minus_one));
        }
    }
}
