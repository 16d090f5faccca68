//! Exact invariants of realized diagrams: the Alexander polynomial and knot
//! determinant by Fox calculus on the Wirtinger presentation, the Kauffman
//! bracket by the full smoothing state sum, and the Jones polynomial.

mod det;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::poly::LaurentPolynomial;
use crate::realize::PlanarDiagram;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    /// The crossing relation matrix had a vanishing determinant. This cannot
    /// happen for a diagram of a knot and exists as a defensive check.
    #[error("degenerate diagram: the crossing relations have zero determinant")]
    DegenerateDiagram,
    /// The state sum was refused because `2^crossings` terms would be needed.
    #[error("{crossings} crossings exceeds the state sum guard of {guard}; raise the guard to proceed")]
    SizeGuardExceeded { crossings: usize, guard: usize },
}

/// The Alexander polynomial in its canonical normalization together with the
/// knot determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderResult {
    /// Canonical form: least exponent zero, positive constant coefficient.
    pub polynomial: LaurentPolynomial,
    /// `|polynomial(-1)|`, always a nonnegative odd integer for knots.
    pub determinant: BigInt,
}

/// Which determinant engine evaluates the Fox matrix. All three give equal
/// results; they differ in cost and in how independent their code paths are.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetStrategy {
    /// Per-prime characteristic polynomial computations combined by Chinese
    /// remaindering, with a rigorous bound fixing the number of primes. Fast
    /// enough for diagrams with hundreds of crossings. The default.
    ModularCrt,
    /// Exact big-integer determinants at n + 2 points, then Newton
    /// interpolation.
    EvalInterpolate,
    /// Fraction-free elimination directly over integer polynomials.
    Symbolic,
}

/// Alexander polynomial and determinant with the default engine.
pub fn alexander(d: &PlanarDiagram) -> Result<AlexanderResult, InvariantError> {
    alexander_with(d, DetStrategy::ModularCrt)
}

/// Alexander polynomial and determinant with an explicit determinant engine.
pub fn alexander_with(
    d: &PlanarDiagram,
    strategy: DetStrategy,
) -> Result<AlexanderResult, InvariantError> {
    let minor = fox_minor(d);
    let coeffs = match strategy {
        DetStrategy::ModularCrt => det::det_modular(&minor),
        DetStrategy::EvalInterpolate => det::det_interpolate(&minor),
        DetStrategy::Symbolic => det::det_symbolic(&minor),
    };
    if coeffs.is_empty() {
        return Err(InvariantError::DegenerateDiagram);
    }
    let polynomial = LaurentPolynomial::from_coeffs(0, coeffs).canonicalize();

    // structural guarantees that hold for every knot diagram; a failure here
    // would mean the computation itself is broken
    let at_one = polynomial.evaluate_at_integer(1);
    assert!(at_one.abs() == BigInt::from(1), "Alexander polynomial must be a unit at t = 1");
    assert!(polynomial.is_palindromic_up_to_sign(), "Alexander coefficients must be symmetric");
    let determinant = polynomial.evaluate_at_integer(-1).abs();
    assert!(&determinant % 2 == BigInt::from(1), "knot determinant must be odd");

    Ok(AlexanderResult { polynomial, determinant })
}

/// Whether two diagrams have equal Alexander polynomials in canonical form.
pub fn same_alexander(a: &PlanarDiagram, b: &PlanarDiagram) -> bool {
    let ra = alexander(a).expect("Alexander is defined for every realized diagram");
    let rb = alexander(b).expect("Alexander is defined for every realized diagram");
    ra.polynomial == rb.polynomial
}

/// Fox derivative matrix of the Wirtinger presentation, with the last row
/// and column removed. Entries are linear: `(constant, t-coefficient)`.
fn fox_minor(d: &PlanarDiagram) -> Vec<Vec<det::LinearEntry>> {
    let partner = d.partner();
    let over = d.over();
    let l = partner.len();
    let n = l / 2;

    // generators are the over-strands: segments from one under-passage to
    // the next, labeled by their starting under-passage
    let unders: Vec<usize> = (0..l).filter(|&p| !over[p]).collect();
    debug_assert_eq!(unders.len(), n);
    let mut gen_of = vec![0usize; l];
    for (k, &u) in unders.iter().enumerate() {
        let next = if k + 1 < n { unders[k + 1] } else { unders[0] + l };
        for p in u..next {
            gen_of[p % l] = k;
        }
    }

    let mins: Vec<usize> = (0..l).filter(|&p| p < partner[p]).collect();
    let mut rows = vec![vec![(0i64, 0i64); n]; n];
    for ((&minp, crossing), row) in mins.iter().zip(d.crossings()).zip(&mut rows) {
        let q = partner[minp];
        let (u, o) = if over[minp] { (q, minp) } else { (minp, q) };
        let a = gen_of[(u + l - 1) % l]; // strand arriving under
        let b = gen_of[u]; // strand departing under
        let c = gen_of[o]; // strand passing over
        if crossing.sign > 0 {
            row[c].0 += 1;
            row[c].1 -= 1; // 1 - t
            row[a].1 += 1; // t
            row[b].0 -= 1; // -1
        } else {
            row[c].0 -= 1;
            row[c].1 += 1; // t - 1
            row[a].0 += 1; // 1
            row[b].1 -= 1; // -t
        }
    }
    rows.truncate(n - 1);
    for row in &mut rows {
        row.truncate(n - 1);
    }
    rows
}

/// Refuse state sums beyond this many crossings unless told otherwise.
pub const DEFAULT_STATE_SUM_GUARD: usize = 24;

/// Kauffman bracket with the default size guard.
pub fn kauffman_bracket(d: &PlanarDiagram) -> Result<LaurentPolynomial, InvariantError> {
    kauffman_bracket_with_guard(d, DEFAULT_STATE_SUM_GUARD)
}

/// Kauffman bracket in the variable A, by summing all `2^n` smoothings.
/// The result is reported raw, without any normalization.
pub fn kauffman_bracket_with_guard(
    d: &PlanarDiagram,
    guard: usize,
) -> Result<LaurentPolynomial, InvariantError> {
    let n = d.n();
    if n > guard {
        return Err(InvariantError::SizeGuardExceeded { crossings: n, guard });
    }
    let crossings = d.crossings();
    let arcs = 2 * n;

    // bucket the states by (A-count minus B-count, number of loops)
    let mut buckets: HashMap<(i64, usize), u64> = HashMap::new();
    let mut dsu = Dsu::new(arcs);
    for state in 0u64..1u64 << n {
        dsu.reset();
        let mut merges = 0usize;
        for (i, c) in crossings.iter().enumerate() {
            // PD tuple (a, b, c, d): the A-smoothing joins a-b and c-d,
            // the B-smoothing joins a-d and b-c
            let [pa, pb, pc, pd] = c.pd.map(|x| x - 1);
            let joins = if state >> i & 1 == 0 { [(pa, pb), (pc, pd)] } else { [(pa, pd), (pb, pc)] };
            for (x, y) in joins {
                if dsu.union(x, y) {
                    merges += 1;
                }
            }
        }
        let loops = arcs - merges;
        let exp = n as i64 - 2 * state.count_ones() as i64;
        *buckets.entry((exp, loops)).or_insert(0) += 1;
    }

    let delta = LaurentPolynomial::from_ints(-2, &[-1, 0, 0, 0, -1]); // -A^-2 - A^2
    let mut delta_pow = vec![LaurentPolynomial::one()];
    for k in 1..=n {
        delta_pow.push(&delta_pow[k - 1] * &delta);
    }
    let mut acc = LaurentPolynomial::zero();
    for ((exp, loops), count) in buckets {
        let term = delta_pow[loops - 1].mul_monomial(exp, &BigInt::from(count));
        acc = &acc + &term;
    }
    Ok(acc)
}

/// Jones polynomial in the variable t, with the default size guard.
pub fn jones_polynomial(d: &PlanarDiagram) -> Result<LaurentPolynomial, InvariantError> {
    jones_polynomial_with_guard(d, DEFAULT_STATE_SUM_GUARD)
}

/// Jones polynomial: the bracket normalized by `(-A)^(-3w)` and evaluated
/// at `t = A^-4`.
pub fn jones_polynomial_with_guard(
    d: &PlanarDiagram,
    guard: usize,
) -> Result<LaurentPolynomial, InvariantError> {
    let bracket = kauffman_bracket_with_guard(d, guard)?;
    let w = d.writhe();
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    let f = bracket.mul_monomial(-3 * w, &BigInt::from(sign));
    let mut terms: Vec<(i64, BigInt)> = f
        .terms()
        .map(|(e, c)| {
            assert_eq!(e % 4, 0, "normalized knot bracket exponents are multiples of four");
            (-e / 4, c.clone())
        })
        .collect();
    terms.sort_by_key(|&(e, _)| e);
    let lo = match terms.first() {
        Some(&(e, _)) => e,
        None => return Ok(LaurentPolynomial::zero()),
    };
    let hi = terms.last().unwrap().0;
    let mut coeffs = vec![BigInt::from(0); (hi - lo + 1) as usize];
    for (e, c) in terms {
        coeffs[(e - lo) as usize] = c;
    }
    Ok(LaurentPolynomial::from_coeffs(lo, coeffs))
}

struct Dsu {
    parent: Vec<u32>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n as u32).collect() }
    }

    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i as u32;
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let g = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = g;
            x = g;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a as u32);
        let rb = self.find(b as u32);
        if ra == rb {
            false
        } else {
            self.parent[ra as usize] = rb;
            true
        }
    }
}
