//! Word-size prime arithmetic backing the exact big-integer algorithms.
//!
//! Two users: the modular polynomial GCD (large-degree gcds occur when the
//! generating-function builder cancels common factors between products of
//! hundreds of linear terms) and the Berlekamp–Massey recurrence fit. Both
//! are exact in the end: every modular candidate is verified over ℤ before
//! being returned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::IntPoly;

const FIRST_PRIME: u64 = (1 << 62) - 57; // start scanning downward from here

/// Deterministic Miller-Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Iterator over 62-bit primes, largest first.
pub struct PrimeStream {
    next: u64,
}

impl PrimeStream {
    pub fn new() -> Self {
        PrimeStream { next: FIRST_PRIME }
    }
}

impl Default for PrimeStream {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for PrimeStream {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        loop {
            let c = self.next;
            self.next -= 2;
            if is_prime_u64(c) {
                return Some(c);
            }
        }
    }
}

fn to_mod(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits u64")
}

pub fn poly_mod(a: &IntPoly, p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = a.coeffs().iter().map(|c| to_mod(c, p)).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn rem_mod_in_place(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let lc_inv = inv_mod(b[db], p);
    while a.len() > db {
        let head = *a.last().unwrap();
        let k = a.len() - 1 - db;
        if head != 0 {
            let f = mul_mod(head, lc_inv, p);
            for (i, &bc) in b.iter().enumerate().take(db) {
                let sub = mul_mod(f, bc, p);
                let idx = k + i;
                a[idx] = (a[idx] + p - sub) % p;
            }
        }
        a.pop();
        while a.last() == Some(&0) {
            a.pop();
        }
    }
}

/// Monic gcd of two polynomials over F_p. Empty vec encodes zero.
pub fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    loop {
        if b.is_empty() {
            if let Some(&lc) = a.last() {
                let inv = inv_mod(lc, p);
                for c in a.iter_mut() {
                    *c = mul_mod(*c, inv, p);
                }
            }
            return a;
        }
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        rem_mod_in_place(&mut a, &b, p);
        std::mem::swap(&mut a, &mut b);
    }
}

/// Symmetric lift of a residue to (−m/2, m/2].
fn symmetric_lift(r: &BigInt, m: &BigInt) -> BigInt {
    let half = m >> 1;
    if r > &half {
        r - m
    } else {
        r.clone()
    }
}

/// Incremental CRT state for one integer coefficient.
#[derive(Clone)]
struct CrtAccum {
    residue: BigInt,
    modulus: BigInt,
}

impl CrtAccum {
    fn new() -> Self {
        CrtAccum {
            residue: BigInt::zero(),
            modulus: BigInt::one(),
        }
    }

    fn push(&mut self, r_p: u64, p: u64) {
        let p_big = BigInt::from(p);
        let m_inv = mod_inverse_big(&self.modulus, &p_big);
        let cur = self.residue.mod_floor(&p_big);
        let delta = (BigInt::from(r_p) - cur).mod_floor(&p_big);
        let t = (delta * m_inv).mod_floor(&p_big);
        self.residue = &self.residue + &self.modulus * t;
        self.modulus *= p_big;
    }

    fn lifted(&self) -> BigInt {
        symmetric_lift(&self.residue, &self.modulus)
    }
}

fn mod_inverse_big(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

/// GCD of two primitive integer polynomials of positive degree via modular
/// images. Candidates are CRT-combined with the leading coefficient pinned to
/// gcd(lc(a), lc(b)) and accepted only when trial division succeeds in ℤ[z],
/// so the result is unconditionally correct.
pub fn gcd_modular(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let lc_gcd = a.leading().gcd(&b.leading());
    let mut primes = PrimeStream::new();
    let mut best_deg = usize::MAX;
    let mut accum: Vec<CrtAccum> = Vec::new();
    let mut stable_rounds = 0;
    let mut last_candidate: Option<IntPoly> = None;

    loop {
        let p = primes.next().expect("prime stream is infinite");
        if (a.leading().mod_floor(&BigInt::from(p))).is_zero()
            || (b.leading().mod_floor(&BigInt::from(p))).is_zero()
        {
            continue;
        }
        let g_p = gcd_mod(poly_mod(a, p), poly_mod(b, p), p);
        let deg = g_p.len() - 1;
        if deg == 0 {
            // coprime modulo p, hence coprime over the integers
            return IntPoly::one();
        }
        if deg > best_deg {
            continue; // unlucky prime
        }
        if deg < best_deg {
            best_deg = deg;
            accum = vec![CrtAccum::new(); deg + 1];
            stable_rounds = 0;
            last_candidate = None;
        }
        // scale the monic image so the leading coefficient is lc_gcd mod p
        let scale = to_mod(&lc_gcd, p);
        for (i, acc) in accum.iter_mut().enumerate() {
            acc.push(mul_mod(g_p[i], scale, p), p);
        }
        let candidate =
            IntPoly::new(accum.iter().map(|acc| acc.lifted()).collect()).primitive_part();
        if Some(&candidate) == last_candidate.as_ref() {
            stable_rounds += 1;
        } else {
            stable_rounds = 0;
            last_candidate = Some(candidate.clone());
        }
        if stable_rounds >= 1
            && a.div_exact(&candidate).is_some()
            && b.div_exact(&candidate).is_some()
        {
            return candidate;
        }
    }
}

/// Berlekamp–Massey over F_p: minimal connection polynomial
/// c_0=1, c_1, …, c_L with Σ c_i · s_{j−i} = 0 for all L ≤ j < len(s).
pub fn berlekamp_massey(s: &[u64], p: u64) -> Vec<u64> {
    let mut c = vec![1u64];
    let mut b = vec![1u64];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut b_disc = 1u64;
    for n in 0..s.len() {
        let mut d = 0u64;
        for (i, &ci) in c.iter().enumerate().take(l + 1) {
            if i <= n {
                d = (d + mul_mod(ci, s[n - i], p)) % p;
            }
        }
        if d == 0 {
            m += 1;
        } else if 2 * l <= n {
            let t = c.clone();
            let coef = mul_mod(d, inv_mod(b_disc, p), p);
            if c.len() < b.len() + m {
                c.resize(b.len() + m, 0);
            }
            for (i, &bi) in b.iter().enumerate() {
                let sub = mul_mod(coef, bi, p);
                c[i + m] = (c[i + m] + p - sub) % p;
            }
            l = n + 1 - l;
            b = t;
            b_disc = d;
            m = 1;
        } else {
            let coef = mul_mod(d, inv_mod(b_disc, p), p);
            if c.len() < b.len() + m {
                c.resize(b.len() + m, 0);
            }
            for (i, &bi) in b.iter().enumerate() {
                let sub = mul_mod(coef, bi, p);
                c[i + m] = (c[i + m] + p - sub) % p;
            }
            m += 1;
        }
    }
    c.truncate(l + 1);
    c
}

/// Wang rational reconstruction: recovers n/d from x mod m with
/// |n|, d ≤ √(m/2). Returns None when no such fraction exists.
pub fn rational_reconstruct(x: &BigInt, m: &BigInt) -> Option<(BigInt, BigInt)> {
    let bound = sqrt_floor(&(m / BigInt::from(2)));
    let (mut r0, mut r1) = (m.clone(), x.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if t1.is_negative() {
        r1 = -r1;
        t1 = -t1;
    }
    if r1.gcd(&t1).is_one() {
        Some((r1, t1))
    } else {
        None
    }
}

fn sqrt_floor(n: &BigInt) -> BigInt {
    if n.is_zero() || n.is_negative() {
        return BigInt::zero();
    }
    n.sqrt()
}
