//! Three independent engines for the determinant of a matrix of linear
//! polynomials `c0 + c1*t`, as produced by Fox calculus. The symbolic and
//! evaluation engines exist as cross-checks; the modular engine is the fast
//! path and is exact because the number of primes is chosen from an a priori
//! coefficient bound.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Matrix entry `c0 + c1 * t`.
pub(super) type LinearEntry = (i64, i64);

/// Coefficients of `det(M)` from `t^0` upward; empty means the zero polynomial.
pub(super) fn det_symbolic(minor: &[Vec<LinearEntry>]) -> Vec<BigInt> {
    let m = minor.len();
    if m == 0 {
        return vec![BigInt::one()];
    }
    let mut a: Vec<Vec<Vec<BigInt>>> = minor
        .iter()
        .map(|row| {
            row.iter()
                .map(|&(c0, c1)| ptrim(vec![BigInt::from(c0), BigInt::from(c1)]))
                .collect()
        })
        .collect();
    // fraction-free elimination: divisions by the previous pivot are exact
    let mut negate = false;
    let mut prev: Vec<BigInt> = vec![BigInt::one()];
    for k in 0..m {
        if a[k][k].is_empty() {
            match (k + 1..m).find(|&r| !a[r][k].is_empty()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Vec::new(),
            }
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let t = psub(&pmul(&a[k][k], &a[i][j]), &pmul(&a[i][k], &a[k][j]));
                a[i][j] = pdivexact(&t, &prev);
            }
            a[i][k] = Vec::new();
        }
        prev = a[k][k].clone();
    }
    let mut det = a[m - 1][m - 1].clone();
    if negate {
        for c in &mut det {
            *c = -&*c;
        }
    }
    det
}

/// Evaluate the determinant at the integer points `0..=m+1` and recover the
/// polynomial by Newton divided differences.
pub(super) fn det_interpolate(minor: &[Vec<LinearEntry>]) -> Vec<BigInt> {
    let m = minor.len();
    if m == 0 {
        return vec![BigInt::one()];
    }
    let pts = m + 2;
    let values: Vec<BigInt> = (0..pts as i64)
        .map(|x| {
            let mat: Vec<Vec<BigInt>> = minor
                .iter()
                .map(|row| row.iter().map(|&(c0, c1)| BigInt::from(c0 + c1 * x)).collect())
                .collect();
            det_integer(mat)
        })
        .collect();

    // divided differences over the points 0, 1, ..., pts-1
    let mut dd: Vec<BigRational> =
        values.into_iter().map(BigRational::from_integer).collect();
    for level in 1..pts {
        for i in (level..pts).rev() {
            let span = BigRational::from_integer(BigInt::from(level as i64));
            dd[i] = (&dd[i] - &dd[i - 1]) / span;
        }
    }

    // expand the Newton basis products
    let mut coeffs: Vec<BigRational> = vec![BigRational::zero(); pts];
    let mut basis: Vec<BigRational> = vec![BigRational::one()];
    for (k, d) in dd.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            coeffs[j] += d * b;
        }
        if k + 1 < pts {
            // basis *= (t - k)
            let xk = BigRational::from_integer(BigInt::from(k as i64));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (j, b) in basis.iter().enumerate() {
                next[j + 1] += b;
                next[j] -= b * &xk;
            }
            basis = next;
        }
    }
    let out: Vec<BigInt> = coeffs
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolated determinant must be integral");
            c.to_integer()
        })
        .collect();
    ptrim(out)
}

/// Exact integer determinant by fraction-free elimination.
fn det_integer(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let m = a.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..m {
        if a[k][k].is_zero() {
            match (k + 1..m).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let t = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = t / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[m - 1][m - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Fixed pool of 61-bit primes for the Chinese remainder reconstruction.
const PRIMES: [u64; 12] = [
    2305843009213693951,
    2305843009213693921,
    2305843009213693907,
    2305843009213693723,
    2305843009213693693,
    2305843009213693669,
    2305843009213693613,
    2305843009213693561,
    2305843009213693549,
    2305843009213693487,
    2305843009213693421,
    2305843009213693373,
];

/// Modular-evaluation engine. Per prime, the determinant polynomial is read
/// off one characteristic polynomial computation; results are combined by
/// Chinese remaindering with enough primes to cover a rigorous coefficient
/// bound, so the answer is exact.
pub(super) fn det_modular(minor: &[Vec<LinearEntry>]) -> Vec<BigInt> {
    let m = minor.len();
    if m == 0 {
        return vec![BigInt::one()];
    }
    // |det coeffs| <= product of row l1-norms, by expanding the determinant
    let mut bound_bits = 2.0f64;
    for row in minor {
        let s: u64 = row.iter().map(|&(c0, c1)| c0.unsigned_abs() + c1.unsigned_abs()).sum();
        bound_bits += (s.max(1) as f64).log2();
    }
    let k = ((bound_bits / 60.9).ceil() as usize).clamp(2, PRIMES.len());
    assert!(
        bound_bits < 60.9 * PRIMES.len() as f64,
        "coefficient bound exceeds the prime pool"
    );

    let residues: Vec<Vec<u64>> =
        PRIMES[..k].iter().map(|&p| det_poly_mod(minor, p)).collect();

    // coefficient-wise CRT with symmetric lift
    let mut out = Vec::with_capacity(m + 1);
    for j in 0..=m {
        let mut x = BigInt::from(residues[0][j]);
        let mut modulus = BigInt::from(PRIMES[0]);
        for (res, &p) in residues.iter().zip(&PRIMES[..k]).skip(1) {
            let pb = BigInt::from(p);
            // x' = x + modulus * ((r - x) / modulus mod p)
            let inv = modinv_big(&modulus, &pb);
            let delta = (BigInt::from(res[j]) - &x) % &pb;
            let mut t = (delta * inv) % &pb;
            if t.is_negative() {
                t += &pb;
            }
            x += &modulus * t;
            modulus *= pb;
        }
        if &x * 2 > modulus {
            x -= &modulus;
        }
        out.push(x);
    }
    ptrim(out)
}

/// `det(M0 + t*M1) mod p` as coefficients `t^0 ..= t^m`.
fn det_poly_mod(minor: &[Vec<LinearEntry>], p: u64) -> Vec<u64> {
    let m = minor.len();
    let to_mod = |v: i64| v.rem_euclid(p as i64) as u64;
    let m1: Vec<Vec<u64>> =
        minor.iter().map(|row| row.iter().map(|&(_, c1)| to_mod(c1)).collect()).collect();
    for c in 0..=m as u64 {
        let mc: Vec<Vec<u64>> = minor
            .iter()
            .map(|row| {
                row.iter().map(|&(c0, c1)| addmod(to_mod(c0), mulmod(c, to_mod(c1), p), p)).collect()
            })
            .collect();
        let Some((d0, b)) = det_and_left_quotient(mc, &m1, p) else {
            continue;
        };
        // det(M0 + tM1) = det(Mc) * det(I + s*B) with s = t - c, B = Mc^-1 M1,
        // and det(I + sB) = sum over k of e_k(eigenvalues) s^k
        let chi = charpoly_mod(b, p);
        let mut coeffs: Vec<u64> = (0..=m)
            .map(|j| {
                let e = chi[m - j];
                let e = if j % 2 == 1 { p - e } else { e } % p;
                mulmod(d0, e, p)
            })
            .collect();
        // substitute s = t - c: shift the polynomial by -c
        let a = (p - c % p) % p;
        for k in 0..m {
            for j in (k..m).rev() {
                coeffs[j] = addmod(coeffs[j], mulmod(a, coeffs[j + 1], p), p);
            }
        }
        return coeffs;
    }
    // det(M0 + cM1) vanished at m+1 points, so the polynomial is zero mod p
    vec![0; m + 1]
}

/// Gaussian elimination of `[mc | m1]`: the determinant of `mc` and, when it
/// is nonzero, `mc^-1 * m1`.
fn det_and_left_quotient(
    mut a: Vec<Vec<u64>>,
    m1: &[Vec<u64>],
    p: u64,
) -> Option<(u64, Vec<Vec<u64>>)> {
    let m = a.len();
    for (row, extra) in a.iter_mut().zip(m1) {
        row.extend(extra.iter().copied());
    }
    let mut det: u64 = 1;
    for k in 0..m {
        let Some(r) = (k..m).find(|&r| a[r][k] != 0) else {
            return None;
        };
        if r != k {
            a.swap(k, r);
            det = p - det;
        }
        let piv = a[k][k];
        det = mulmod(det, piv, p);
        let inv = modpow(piv, p - 2, p);
        for j in k..2 * m {
            a[k][j] = mulmod(a[k][j], inv, p);
        }
        for i in 0..m {
            if i != k && a[i][k] != 0 {
                let f = a[i][k];
                for j in k..2 * m {
                    let s = mulmod(f, a[k][j], p);
                    a[i][j] = submod(a[i][j], s, p);
                }
            }
        }
    }
    let b: Vec<Vec<u64>> = a.into_iter().map(|row| row[m..].to_vec()).collect();
    Some((det % p, b))
}

/// Characteristic polynomial `det(xI - B) mod p`, coefficients `x^0 ..= x^m`,
/// by Hessenberg reduction and the leading-minor recurrence.
fn charpoly_mod(mut b: Vec<Vec<u64>>, p: u64) -> Vec<u64> {
    let m = b.len();
    // similarity reduction to upper Hessenberg form
    for k in 0..m.saturating_sub(2) {
        let Some(r) = (k + 1..m).find(|&r| b[r][k] != 0) else {
            continue;
        };
        if r != k + 1 {
            b.swap(r, k + 1);
            for row in &mut b {
                row.swap(r, k + 1);
            }
        }
        let inv = modpow(b[k + 1][k], p - 2, p);
        for i in k + 2..m {
            if b[i][k] == 0 {
                continue;
            }
            let f = mulmod(b[i][k], inv, p);
            for j in 0..m {
                let s = mulmod(f, b[k + 1][j], p);
                b[i][j] = submod(b[i][j], s, p);
            }
            for i2 in 0..m {
                let s = mulmod(f, b[i2][i], p);
                b[i2][k + 1] = addmod(b[i2][k + 1], s, p);
            }
        }
    }

    // p_k(x) = (x - H[k-1][k-1]) p_{k-1}(x)
    //          - sum_i H[i][k-1] (prod of subdiagonals between) p_i(x)
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=m {
        let mut next = vec![0u64; k + 1];
        let prev = &polys[k - 1];
        for (j, &c) in prev.iter().enumerate() {
            next[j + 1] = addmod(next[j + 1], c, p);
            let s = mulmod(b[k - 1][k - 1], c, p);
            next[j] = submod(next[j], s, p);
        }
        let mut sub = 1u64; // product of subdiagonal entries H[j][j-1] for j in i+1..k
        for i in (0..k.saturating_sub(1)).rev() {
            sub = mulmod(sub, b[i + 1][i], p);
            if sub == 0 {
                break;
            }
            let f = mulmod(b[i][k - 1], sub, p);
            if f != 0 {
                for (j, &c) in polys[i].iter().enumerate() {
                    let s = mulmod(f, c, p);
                    next[j] = submod(next[j], s, p);
                }
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

fn modpow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn modinv_big(a: &BigInt, p: &BigInt) -> BigInt {
    // extended Euclid; p is prime and a is nonzero mod p
    use num_integer::Integer;
    let (mut r0, mut r1) = (p.clone(), a.mod_floor(p));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r);
        let s = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s);
    }
    debug_assert!(r0.is_one());
    s0.mod_floor(p)
}

fn ptrim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn pmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    ptrim(out)
}

fn psub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    ptrim(out)
}

/// Exact polynomial long division; panics if the division leaves a remainder.
fn pdivexact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(!den.is_empty(), "division by the zero polynomial");
    if num.is_empty() {
        return Vec::new();
    }
    assert!(num.len() >= den.len(), "quotient would not be a polynomial");
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - den.len() + 1];
    let lead = den.last().unwrap();
    for k in (0..quot.len()).rev() {
        let top = rem[k + den.len() - 1].clone();
        if top.is_zero() {
            continue;
        }
        let (q, r) = num_integer::Integer::div_rem(&top, lead);
        assert!(r.is_zero(), "inexact leading division");
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &q * d;
        }
        quot[k] = q;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact polynomial division");
    ptrim(quot)
}
