//! Univariate polynomials used by the field test: exact arithmetic over the
//! rationals plus irreducibility checks modulo small primes.
//!
//! Coefficient vectors run from the constant term upward.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::exactlin::{primitive_integer_vector, Rational};

pub(crate) type Poly = Vec<Rational>;

pub(crate) fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub(crate) fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub(crate) fn monic(p: Poly) -> Poly {
    let p = trim(p);
    match p.last().cloned() {
        Some(lead) => p.into_iter().map(|c| c / &lead).collect(),
        None => p,
    }
}

pub(crate) fn derivative(p: &[Rational]) -> Poly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rational::from_integer(BigInt::from(k)))
            .collect(),
    )
}

/// Quotient and remainder of `a` by nonzero `b`.
pub(crate) fn divmod(a: &[Rational], b: &[Rational]) -> (Poly, Poly) {
    let b = trim(b.to_vec());
    let db = degree(&b).expect("division by the zero polynomial");
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &b[db];
        for (k, bk) in b.iter().enumerate() {
            r[dr - db + k] -= &c * bk;
        }
        q[dr - db] = c;
        r = trim(r);
    }
    (trim(q), r)
}

pub(crate) fn gcd(a: &[Rational], b: &[Rational]) -> Poly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let (_, r) = divmod(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

/// Rational roots by the rational root theorem. Returns `None` when a
/// coefficient is too large for divisor enumeration.
pub(crate) fn rational_roots(p: &[Rational]) -> Option<Vec<Rational>> {
    let p = trim(p.to_vec());
    let mut ints = primitive_integer_vector(&p);
    let mut roots = Vec::new();
    if ints.first().is_some_and(|c| c.is_zero()) {
        roots.push(Rational::zero());
        while ints.first().is_some_and(|c| c.is_zero()) {
            ints.remove(0);
        }
    }
    if ints.len() <= 1 {
        return Some(roots);
    }
    let nums = divisors(ints.first()?)?;
    let dens = divisors(ints.last()?)?;
    let mut seen = Vec::new();
    for n in &nums {
        for d in &dens {
            for sign in [1i64, -1] {
                let r = Rational::new(BigInt::from(*n) * sign, BigInt::from(*d));
                if seen.contains(&r) {
                    continue;
                }
                seen.push(r.clone());
                if eval_int(&ints, &r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    Some(roots)
}

fn eval_int(p: &[BigInt], x: &Rational) -> Rational {
    p.iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
}

const DIVISOR_LIMIT: u64 = 1 << 40;

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    Some(out)
}

pub(crate) const SMALL_PRIMES: [u64; 40] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179,
];

/// Searches for a prime modulo which `p` keeps its degree and is irreducible;
/// such a prime certifies irreducibility over the rationals.
pub(crate) fn irreducibility_prime(p: &[Rational]) -> Option<u64> {
    let ints = primitive_integer_vector(&trim(p.to_vec()));
    let n = ints.len().checked_sub(1)?;
    if n == 0 {
        return None;
    }
    if n == 1 {
        return Some(2);
    }
    SMALL_PRIMES.iter().copied().find(|&q| {
        let f: Vec<u64> = ints
            .iter()
            .map(|c| c.mod_floor(&BigInt::from(q)).to_u64().expect("residue fits"))
            .collect();
        f[n] != 0 && irreducible_mod(&f, q)
    })
}

/// Ben-Or: `f` of degree `n` is irreducible over `F_q` iff
/// `gcd(f, x^(q^i) - x) = 1` for `i = 1..=n/2`.
fn irreducible_mod(f: &[u64], q: u64) -> bool {
    let f = make_monic_mod(f, q);
    let n = f.len() - 1;
    let mut xp = vec![0, 1];
    for _ in 1..=n / 2 {
        xp = pow_mod(&xp, q, &f, q);
        let mut t = xp.clone();
        t.resize(t.len().max(2), 0);
        t[1] = (t[1] + q - 1) % q;
        let g = gcd_mod(&f, &trim_mod(t), q);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

fn trim_mod(mut p: Vec<u64>) -> Vec<u64> {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn inv_mod(a: u64, q: u64) -> u64 {
    let mut r = 1u64;
    let (mut b, mut e) = (a % q, q - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    r
}

fn make_monic_mod(f: &[u64], q: u64) -> Vec<u64> {
    let f = trim_mod(f.to_vec());
    let inv = inv_mod(*f.last().expect("nonzero polynomial"), q);
    f.into_iter().map(|c| c * inv % q).collect()
}

fn rem_mod(a: &[u64], m: &[u64], q: u64) -> Vec<u64> {
    let m = make_monic_mod(m, q);
    let dm = m.len() - 1;
    let mut r = trim_mod(a.to_vec());
    while r.len() > dm {
        let dr = r.len() - 1;
        let c = r[dr];
        for (k, mk) in m.iter().enumerate() {
            let idx = dr - dm + k;
            r[idx] = (r[idx] + q - c * mk % q) % q;
        }
        r = trim_mod(r);
    }
    r
}

fn mul_rem(a: &[u64], b: &[u64], m: &[u64], q: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % q;
        }
    }
    rem_mod(&out, m, q)
}

fn pow_mod(base: &[u64], mut e: u64, m: &[u64], q: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = rem_mod(base, m, q);
    while e > 0 {
        if e & 1 == 1 {
            result = mul_rem(&result, &b, m, q);
        }
        b = mul_rem(&b, &b, m, q);
        e >>= 1;
    }
    result
}

fn gcd_mod(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim_mod(a.to_vec()), trim_mod(b.to_vec()));
    while !b.is_empty() {
        let r = rem_mod(&a, &b, q);
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        make_monic_mod(&a, q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    fn p(c: &[i64]) -> Poly {
        c.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn division_and_gcd() {
        // (t^2 - 1) = (t - 1)(t + 1)
        let (q, r) = divmod(&p(&[-1, 0, 1]), &p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1]));
        assert!(r.is_empty());
        assert_eq!(gcd(&p(&[-1, 0, 1]), &p(&[1, 2, 1])), p(&[1, 1]));
        assert_eq!(derivative(&p(&[5, 0, 3])), p(&[0, 6]));
    }

    #[test]
    fn roots() {
        let mut r = rational_roots(&p(&[-1, 0, 1])).unwrap();
        r.sort();
        assert_eq!(r, vec![rat(-1), rat(1)]);
        assert!(rational_roots(&p(&[-2, 0, 1])).unwrap().is_empty());
        // 2t^2 - 3t + 1 = (2t - 1)(t - 1)
        let r = rational_roots(&p(&[1, -3, 2])).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(rational_roots(&p(&[0, 0, 1])).unwrap(), vec![rat(0)]);
    }

    #[test]
    fn irreducibility_certificates() {
        assert!(irreducibility_prime(&p(&[-2, 0, 1])).is_some());
        assert!(irreducibility_prime(&p(&[-2, 0, 0, 1])).is_some());
        assert!(irreducibility_prime(&p(&[-1, 0, 1])).is_none());
        // x^4 + 1 is irreducible over Q but reducible modulo every prime
        assert!(irreducibility_prime(&p(&[1, 0, 0, 0, 1])).is_none());
        // x^4 - 2
        assert!(irreducibility_prime(&p(&[-2, 0, 0, 0, 1])).is_some());
    }
}
