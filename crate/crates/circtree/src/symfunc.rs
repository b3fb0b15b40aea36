//! Symmetric-function constructions on polynomial root multisets: power sums,
//! subset-product polynomials and composed products.
//!
//! Everything here is exact. Root multisets are never touched numerically;
//! they are manipulated through Newton's identities, where every division is
//! by a known-exact integer factor.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::AlgError;
use crate::poly::IntPoly;

/// Default cap on the degree C(deg r, k) of a subset-product polynomial.
pub const DEFAULT_DIM_CAP: u64 = 10_000;

/// Power sums p_1..p_n of the roots of a monic integer polynomial, via
/// Newton's identities. p_m = Σ ξᵢ^m over the root multiset.
pub fn power_sums(r: &IntPoly, n: usize) -> Vec<BigInt> {
    assert!(r.is_monic(), "power sums need a monic polynomial");
    let d = r.degree_nonzero();
    // e_k = (−1)^k · coeff(d−k): elementary symmetric functions
    let e: Vec<BigInt> = (0..=d)
        .map(|k| {
            let c = r.coeff(d - k);
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    let mut p: Vec<BigInt> = Vec::with_capacity(n + 1);
    p.push(BigInt::from(d)); // p_0 = number of roots
    for m in 1..=n {
        // p_m = Σ_{i=1}^{m−1} (−1)^{i−1} e_i p_{m−i} + (−1)^{m−1} m·e_m
        let mut acc = BigInt::zero();
        for i in 1..=(m - 1).min(d) {
            let term = &e[i] * &p[m - i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if m <= d {
            let me = BigInt::from(m) * &e[m];
            if m % 2 == 1 {
                acc += me;
            } else {
                acc -= me;
            }
        }
        p.push(acc);
    }
    p.split_off(1)
}

/// Reconstructs the monic degree-d polynomial whose roots have the given
/// power sums p_1..p_d. Inverse of [`power_sums`]; all divisions are exact
/// because the elementary symmetric functions are integers here.
pub fn poly_from_power_sums(p: &[BigInt], d: usize) -> IntPoly {
    assert!(p.len() >= d);
    let mut e: Vec<BigInt> = Vec::with_capacity(d + 1);
    e.push(BigInt::one());
    for m in 1..=d {
        // m·e_m = Σ_{i=1..m} (−1)^{i−1} e_{m−i} p_i
        let mut acc = BigInt::zero();
        for i in 1..=m {
            let term = &e[m - i] * &p[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (q, rem) = acc.div_rem(&BigInt::from(m));
        debug_assert!(
            rem.is_zero(),
            "Newton reconstruction division must be exact"
        );
        e.push(q);
    }
    let mut coeffs = vec![BigInt::zero(); d + 1];
    for (k, ek) in e.into_iter().enumerate() {
        // coeff of z^{d−k} is (−1)^k e_k
        coeffs[d - k] = if k % 2 == 1 { -ek } else { ek };
    }
    IntPoly::new(coeffs)
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Monic polynomial of degree C(deg r, k) whose roots are the products of
/// the k-element subsets of the root multiset of monic `r`.
///
/// Route: the m-th power sum of the subset products equals the k-th
/// elementary symmetric function of the m-th powers of the roots of `r`,
/// which Newton's identities extract from the plain power sums of `r`.
/// (Equivalent to the characteristic polynomial of the k-th exterior power
/// of the companion matrix, which the tests use as an oracle.)
pub fn subset_product_poly(r: &IntPoly, k: usize) -> Result<IntPoly, AlgError> {
    subset_product_poly_capped(r, k, DEFAULT_DIM_CAP)
}

pub fn subset_product_poly_capped(r: &IntPoly, k: usize, cap: u64) -> Result<IntPoly, AlgError> {
    assert!(r.is_monic(), "subset products need a monic polynomial");
    let d = r.degree_nonzero();
    if k > d {
        return Err(AlgError::SubsetCardinality { k, degree: d });
    }
    let dim = binomial(d, k);
    if dim > cap as u128 {
        return Err(AlgError::DimensionCap { dim, cap });
    }
    let dim = dim as usize;
    if k == 0 || k == d {
        // single root: the empty product 1, or the full product ±constant term
        let root = if k == 0 {
            BigInt::one()
        } else {
            let c = r.coeff(0);
            if d % 2 == 1 {
                -c
            } else {
                c
            }
        };
        return Ok(IntPoly::new(vec![-root, BigInt::one()]));
    }
    let p = power_sums(r, k * dim);
    // e_k of powered roots, for each power m = 1..dim
    let mut subset_sums: Vec<BigInt> = Vec::with_capacity(dim);
    for m in 1..=dim {
        let powered: Vec<BigInt> = (1..=k).map(|i| p[m * i - 1].clone()).collect();
        subset_sums.push(elementary_from_power_sums(&powered, k, d));
    }
    Ok(poly_from_power_sums(&subset_sums, dim))
}

/// e_k(x_1..x_d) given the power sums p_1..p_k of the x's, via Newton.
/// `d` only matters through the integrality of the result.
fn elementary_from_power_sums(p: &[BigInt], k: usize, _d: usize) -> BigInt {
    let mut e: Vec<BigInt> = Vec::with_capacity(k + 1);
    e.push(BigInt::one());
    for m in 1..=k {
        let mut acc = BigInt::zero();
        for i in 1..=m {
            let term = &e[m - i] * &p[i - 1];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        let (q, rem) = acc.div_rem(&BigInt::from(m));
        debug_assert!(rem.is_zero());
        e.push(q);
    }
    e.pop().unwrap()
}

/// Monic polynomial of degree deg(a)·deg(b) whose roots are all pairwise
/// products of a root of `a` with a root of `b`. The power sums multiply:
/// p_m(a⊗b) = p_m(a)·p_m(b).
pub fn composed_product(a: &IntPoly, b: &IntPoly) -> Result<IntPoly, AlgError> {
    if !a.is_monic() || !b.is_monic() {
        return Err(AlgError::NotMonic);
    }
    let da = a.degree_nonzero();
    let db = b.degree_nonzero();
    if da == 0 || db == 0 {
        // one factor has no roots, so the product multiset is empty
        return Ok(IntPoly::one());
    }
    let dim = da * db;
    let pa = power_sums(a, dim);
    let pb = power_sums(b, dim);
    let p: Vec<BigInt> = pa.iter().zip(&pb).map(|(x, y)| x * y).collect();
    Ok(poly_from_power_sums(&p, dim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::det_bareiss;
    use num_rational::BigRational;
    use num_traits::Signed;

    /// Independent oracle: characteristic polynomial of the k-th exterior
    /// power of the companion matrix, via determinant evaluation at
    /// dim+1 integer points and exact Lagrange interpolation.
    fn subset_poly_exterior_oracle(r: &IntPoly, k: usize) -> IntPoly {
        let d = r.degree_nonzero();
        // companion matrix of r: C[i][d-1] = -c_i, C[i][i-1] = 1
        let mut comp = vec![vec![BigInt::zero(); d]; d];
        for i in 0..d {
            comp[i][d - 1] = -r.coeff(i);
            if i > 0 {
                comp[i][i - 1] = BigInt::one();
            }
        }
        let subsets: Vec<Vec<usize>> = k_subsets(d, k);
        let dim = subsets.len();
        // exterior power: entry (S,T) = det of the S×T minor of comp
        let mut ext = vec![vec![BigInt::zero(); dim]; dim];
        for (si, s) in subsets.iter().enumerate() {
            for (ti, t) in subsets.iter().enumerate() {
                let minor: Vec<Vec<BigInt>> = s
                    .iter()
                    .map(|&i| t.iter().map(|&j| comp[i][j].clone()).collect())
                    .collect();
                ext[si][ti] = det_bareiss(minor);
            }
        }
        // char poly det(zI − M) by evaluation + Lagrange interpolation
        let points: Vec<BigInt> = (0..=dim as i64).map(BigInt::from).collect();
        let values: Vec<BigInt> = points
            .iter()
            .map(|z| {
                let m: Vec<Vec<BigInt>> = (0..dim)
                    .map(|i| {
                        (0..dim)
                            .map(|j| {
                                if i == j {
                                    z - &ext[i][j]
                                } else {
                                    -ext[i][j].clone()
                                }
                            })
                            .collect()
                    })
                    .collect();
                det_bareiss(m)
            })
            .collect();
        interpolate_integer_poly(&points, &values)
    }

    fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, n, k, &mut cur, &mut out);
        out
    }

    fn interpolate_integer_poly(points: &[BigInt], values: &[BigInt]) -> IntPoly {
        // Lagrange over the rationals, then check integrality
        let n = points.len();
        let mut acc: Vec<BigRational> = vec![BigRational::zero(); n];
        for i in 0..n {
            // basis polynomial ∏_{j≠i} (z − x_j) / (x_i − x_j)
            let mut basis: Vec<BigRational> = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for j in 0..n {
                if i == j {
                    continue;
                }
                let xj = BigRational::from_integer(points[j].clone());
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (t, c) in basis.iter().enumerate() {
                    next[t + 1] += c;
                    next[t] -= c * &xj;
                }
                basis = next;
                denom *= BigRational::from_integer(&points[i] - &points[j]);
            }
            let scale = BigRational::from_integer(values[i].clone()) / denom;
            for (t, c) in basis.iter().enumerate() {
                acc[t] += c * &scale;
            }
        }
        IntPoly::new(
            acc.into_iter()
                .map(|c| {
                    assert!(c.is_integer(), "interpolation must produce integers");
                    c.to_integer()
                })
                .collect(),
        )
    }

    #[test]
    fn power_sums_of_golden_quadratic() {
        // z² + 3z + 1: roots with sum −3, product 1
        let r = IntPoly::from_i64(&[1, 3, 1]);
        let p = power_sums(&r, 4);
        assert_eq!(p[0], BigInt::from(-3));
        assert_eq!(p[1], BigInt::from(7)); // ξ²+ξ'² = 9 − 2
        assert_eq!(p[2], BigInt::from(-18)); // −L₆ = −(4·... ) = s₁p₂−s₂p₁ = −3·7 − 1·(−3)
        assert_eq!(p[3], BigInt::from(47));
    }

    #[test]
    fn poly_from_power_sums_roundtrip() {
        let r = IntPoly::from_i64(&[-6, 11, -6, 1]); // (z−1)(z−2)(z−3)
        let p = power_sums(&r, 3);
        assert_eq!(poly_from_power_sums(&p, 3), r);
    }

    #[test]
    fn subset_identity_cases() {
        let r = IntPoly::from_i64(&[1, 3, 1]);
        // k=1 is the polynomial itself
        assert_eq!(subset_product_poly(&r, 1).unwrap(), r);
        // k=2: reciprocal roots multiply to 1 ⇒ z − 1
        assert_eq!(
            subset_product_poly(&r, 2).unwrap(),
            IntPoly::from_i64(&[-1, 1])
        );
        // k=0: empty product ⇒ z − 1
        assert_eq!(
            subset_product_poly(&r, 0).unwrap(),
            IntPoly::from_i64(&[-1, 1])
        );
    }

    #[test]
    fn subset_rejects_out_of_range_and_cap() {
        let r = IntPoly::from_i64(&[1, 3, 1]);
        assert!(matches!(
            subset_product_poly(&r, 3),
            Err(AlgError::SubsetCardinality { .. })
        ));
        let big = IntPoly::new(
            std::iter::repeat_with(BigInt::zero)
                .take(40)
                .chain(std::iter::once(BigInt::one()))
                .collect::<Vec<_>>(),
        );
        assert!(matches!(
            subset_product_poly_capped(&big, 20, 10_000),
            Err(AlgError::DimensionCap { .. })
        ));
    }

    #[test]
    fn subset_matches_exterior_power_oracle() {
        // a handful of small monic polynomials, all k
        let polys = [
            IntPoly::from_i64(&[1, 3, 1]),
            IntPoly::from_i64(&[-2, 0, 1]),
            IntPoly::from_i64(&[-6, 11, -6, 1]),
            IntPoly::from_i64(&[3, -1, 4, 1]),
            IntPoly::from_i64(&[1, -4, 2, -4, 1]),
        ];
        for r in &polys {
            let d = r.degree_nonzero();
            for k in 0..=d {
                let fast = subset_product_poly(r, k).unwrap();
                let oracle = subset_poly_exterior_oracle(r, k);
                assert_eq!(fast, oracle, "poly {:?} k={}", r, k);
            }
        }
    }

    #[test]
    fn subset_palindromic_reciprocity() {
        // palindromic r: subset_k and subset_{d−k} have reciprocal root sets
        let pals = [
            IntPoly::from_i64(&[1, 3, 1]),
            IntPoly::from_i64(&[1, -4, 1]),
            IntPoly::from_i64(&[1, 1, -6, 1, 1]),
            IntPoly::from_i64(&[1, 0, -3, 0, 1]),
        ];
        for r in &pals {
            assert!(r.is_palindromic());
            let d = r.degree_nonzero();
            for k in 0..=d {
                let a = subset_product_poly(r, k).unwrap();
                let b = subset_product_poly(r, d - k).unwrap();
                // reverse of a, re-normalized monic with sign fixed, must equal b
                let rev = a.reverse();
                let lead = rev.leading();
                let monic_rev = rev
                    .div_scalar_exact(&lead)
                    .expect("palindromic subset reversal stays integral");
                let monic_rev = if monic_rev.leading().is_negative() {
                    -&monic_rev
                } else {
                    monic_rev
                };
                assert_eq!(monic_rev, b, "r={:?} k={}", r, k);
            }
        }
    }

    #[test]
    fn alternating_subset_sums_equal_root_product() {
        // ∏(ξⁿ−1) = Σ_k (−1)^{d−k} · (sum of n-th powers of k-subset products),
        // with the left side from the resultant and the right side read off
        // the subset-product polynomials
        let polys = [
            IntPoly::from_i64(&[1, 3, 1]),
            IntPoly::from_i64(&[-2, 1, 1]),
            IntPoly::from_i64(&[-6, 11, -6, 1]),
            IntPoly::from_i64(&[1, -4, 2, -4, 1]),
        ];
        for r in &polys {
            let d = r.degree_nonzero();
            for n in 1..=8usize {
                let zn_minus_1 = &IntPoly::monomial(BigInt::from(1), n) - &IntPoly::from_i64(&[1]);
                let lhs = r.resultant(&zn_minus_1).unwrap();
                let mut rhs = BigInt::zero();
                for k in 0..=d {
                    let subset = subset_product_poly(r, k).unwrap();
                    let pw = power_sums(&subset, n);
                    let term = pw[n - 1].clone();
                    if (d - k) % 2 == 0 {
                        rhs += term;
                    } else {
                        rhs -= term;
                    }
                }
                assert_eq!(lhs, rhs, "r={:?} n={}", r, n);
            }
        }
    }

    #[test]
    fn composed_product_examples() {
        // roots 2 and 3 ⇒ root 6
        let a = IntPoly::from_i64(&[-2, 1]);
        let b = IntPoly::from_i64(&[-3, 1]);
        assert_eq!(
            composed_product(&a, &b).unwrap(),
            IntPoly::from_i64(&[-6, 1])
        );
        // multiplying roots by 1 is the identity
        let one_root = IntPoly::from_i64(&[-1, 1]);
        let q = IntPoly::from_i64(&[1, 3, 1]);
        assert_eq!(composed_product(&one_root, &q).unwrap(), q);
        assert_eq!(composed_product(&q, &one_root).unwrap(), q);
    }

    #[test]
    fn composed_product_matches_resultant_definition() {
        // Res_y(a(y), y^deg(b) · b(x/y)) computed per-point and interpolated
        let a = IntPoly::from_i64(&[1, 3, 1]);
        let b = IntPoly::from_i64(&[-2, 0, 1]);
        let fast = composed_product(&a, &b).unwrap();
        let dim = 4;
        let points: Vec<BigInt> = (0..=dim as i64).map(BigInt::from).collect();
        let values: Vec<BigInt> = points
            .iter()
            .map(|t| {
                // y^db · b(t/y) = Σ b_j t^j y^{db−j}
                let db = b.degree_nonzero();
                let coeffs: Vec<BigInt> = (0..=db)
                    .map(|m| {
                        // coefficient of y^m: b_{db−m} t^{db−m}
                        let j = db - m;
                        b.coeff(j) * t.pow(j as u32)
                    })
                    .collect();
                let bt = IntPoly::new(coeffs);
                if bt.is_zero() {
                    BigInt::zero()
                } else {
                    a.resultant(&bt).unwrap()
                }
            })
            .collect();
        let oracle = interpolate_integer_poly(&points, &values);
        // the resultant route is monic here because a is monic
        assert_eq!(fast, oracle);
    }
}
