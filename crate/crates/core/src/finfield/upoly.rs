//! Dense univariate polynomials over GF(p), just enough for Rabin's
//! irreducibility test.

use crate::numtheory::prime_divisors;

/// Coefficients low-degree first, no trailing zeros (zero polynomial is empty).
pub(crate) type Poly = Vec<u64>;

fn trim(f: &mut Poly) {
    while f.last() == Some(&0) {
        f.pop();
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    acc
}

fn sub(f: &Poly, g: &Poly, p: u64) -> Poly {
    let n = f.len().max(g.len());
    let mut out: Poly = (0..n)
        .map(|i| {
            let a = f.get(i).copied().unwrap_or(0);
            let b = g.get(i).copied().unwrap_or(0);
            (a + p - b) % p
        })
        .collect();
    trim(&mut out);
    out
}

/// Remainder of `f` modulo `m` (m nonzero).
fn rem(f: &Poly, m: &Poly, p: u64) -> Poly {
    let mut r = f.clone();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] * lead_inv % p;
        if c != 0 {
            for (j, &mj) in m.iter().enumerate() {
                let idx = top - dm + j;
                r[idx] = (r[idx] + p - c * mj % p) % p;
            }
        }
        trim(&mut r);
    }
    r
}

fn mul_mod(f: &Poly, g: &Poly, m: &Poly, p: u64) -> Poly {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, &a) in f.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + a * b) % p;
        }
    }
    rem(&out, m, p)
}

fn pow_poly_mod(base: &Poly, mut e: u64, m: &Poly, p: u64) -> Poly {
    let mut acc = rem(&vec![1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

fn gcd(a: &Poly, b: &Poly, p: u64) -> Poly {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    x
}

/// Rabin's test: `f` (monic, degree k) is irreducible over GF(p) iff
/// X^(p^k) = X mod f and gcd(X^(p^(k/s)) - X, f) = 1 for every prime s | k.
pub(crate) fn is_irreducible(f: &Poly, p: u64) -> bool {
    let k = f.len().saturating_sub(1);
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let x: Poly = vec![0, 1];
    // frob[j] = X^(p^j) mod f
    let mut frob = vec![rem(&x, f, p)];
    for j in 1..=k {
        let next = pow_poly_mod(&frob[j - 1], p, f, p);
        frob.push(next);
    }
    if !sub(&frob[k], &x, p).is_empty() {
        return false;
    }
    for s in prime_divisors(k as u64) {
        let h = sub(&frob[k / s as usize], &x, p);
        let g = gcd(&h, f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_irreducible(f: &Poly, p: u64) -> bool {
        // no monic factor of degree 1..=deg/2
        let k = f.len() - 1;
        for d in 1..=k / 2 {
            let count = p.pow(d as u32);
            for n in 0..count {
                let mut g: Poly = (0..d).map(|i| (n / p.pow(i as u32)) % p).collect();
                g.push(1);
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn rabin_matches_brute_force_small() {
        for (p, k) in [
            (2u64, 2usize),
            (2, 3),
            (2, 4),
            (3, 2),
            (3, 3),
            (5, 2),
            (2, 6),
        ] {
            for n in 0..p.pow(k as u32) {
                let mut f: Poly = (0..k).map(|i| (n / p.pow(i as u32)) % p).collect();
                f.push(1);
                assert_eq!(
                    is_irreducible(&f, p),
                    brute_irreducible(&f, p),
                    "p={p} f={f:?}"
                );
            }
        }
    }

    #[test]
    fn known_polynomials() {
        // x^2 + 1 is irreducible over GF(3) but not GF(5)
        assert!(is_irreducible(&vec![1, 0, 1], 3));
        assert!(!is_irreducible(&vec![1, 0, 1], 5));
        // x^4 + x + 1 over GF(2)
        assert!(is_irreducible(&vec![1, 1, 0, 0, 1], 2));
    }
}
