//! Rational tangles built from continued fractions, their numerator closures
//! (two-bridge knots), Montesinos diagrams, and Schubert's equivalence test
//! for two-bridge fractions.

use std::collections::HashMap;
use std::fmt;

use num_integer::Integer;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::corpus::FormatError;
use crate::dt::DtCode;
use crate::invariants::{alexander, same_alexander};
use crate::realize::{realize, PlanarDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error("division by zero while evaluating a continued fraction")]
    DivisionByZero,
    #[error("the closure is a {components}-component link, not a knot")]
    NotAKnot { components: usize },
    #[error("rule not applicable: {0}")]
    RuleNotApplicable(String),
}

/// A reduced fraction with positive denominator, the value of a rational
/// tangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: i64,
    den: i64,
}

impl Fraction {
    /// Reduce and normalize so the denominator is at least 1.
    pub fn new(num: i64, den: i64) -> Result<Self, TangleError> {
        if den == 0 {
            return Err(TangleError::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Ok(Fraction { num, den })
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Continued fraction `[a1, a2, ..., ak]` with the innermost term first:
/// its value is `ak + 1/(a(k-1) + 1/(... + 1/a1))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    terms: Vec<i64>,
}

impl ContinuedFraction {
    pub fn new(terms: Vec<i64>) -> Self {
        assert!(!terms.is_empty(), "a continued fraction needs at least one term");
        ContinuedFraction { terms }
    }

    pub fn terms(&self) -> &[i64] {
        &self.terms
    }

    /// Crossings of the rational tangle the terms describe.
    pub fn crossing_count(&self) -> usize {
        self.terms.iter().map(|a| a.unsigned_abs() as usize).sum()
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// Expand a fraction by repeated truncation toward zero. The expansion ends
/// with the outermost twist region and always evaluates back to the input.
pub fn fraction_to_cf(f: Fraction) -> ContinuedFraction {
    let (mut num, mut den) = (f.num, f.den);
    let mut terms = Vec::new();
    loop {
        let a = num / den; // truncates toward zero
        terms.push(a);
        num -= a * den;
        if num == 0 {
            break;
        }
        std::mem::swap(&mut num, &mut den);
        if den < 0 {
            num = -num;
            den = -den;
        }
    }
    terms.reverse();
    ContinuedFraction::new(terms)
}

/// Evaluate a continued fraction. A zero intermediate value where a
/// reciprocal is needed is an error.
pub fn cf_to_fraction(cf: &ContinuedFraction) -> Result<Fraction, TangleError> {
    let mut iter = cf.terms().iter();
    let first = *iter.next().expect("nonempty by construction");
    let (mut num, mut den) = (first as i128, 1i128);
    for &a in iter {
        if num == 0 {
            return Err(TangleError::DivisionByZero);
        }
        let new_num = a as i128 * num + den;
        den = num;
        num = new_num;
        if den < 0 {
            num = -num;
            den = -den;
        }
    }
    let num = num.to_i64().ok_or(TangleError::DivisionByZero)?;
    let den = den.to_i64().ok_or(TangleError::DivisionByZero)?;
    Fraction::new(num, den)
}

/// A Montesinos presentation: an integer twist region `a0` and rational
/// boxes `b1/a1, ..., bm/am`, each with denominator at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MontesinosForm {
    a0: i64,
    boxes: Vec<Fraction>,
}

impl MontesinosForm {
    pub fn new(a0: i64, boxes: Vec<Fraction>) -> Result<Self, TangleError> {
        if boxes.is_empty() {
            return Err(TangleError::RuleNotApplicable(
                "a Montesinos form needs at least one rational box".into(),
            ));
        }
        if let Some(b) = boxes.iter().find(|b| b.denominator() < 2) {
            return Err(TangleError::RuleNotApplicable(format!(
                "box {b} is an integer tangle; fold it into the leading twist region"
            )));
        }
        Ok(MontesinosForm { a0, boxes })
    }

    pub fn a0(&self) -> i64 {
        self.a0
    }

    pub fn boxes(&self) -> &[Fraction] {
        &self.boxes
    }

    /// Parse the text form `(a0; b1/a1, b2/a2, ...)`.
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let fail = |reason: String| FormatError { line: 1, reason };
        let body = text
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| fail("expected a parenthesized form (a0; b1/a1, ...)".into()))?;
        let (head, tail) = body
            .split_once(';')
            .ok_or_else(|| fail("expected ';' after the integer twist region".into()))?;
        let a0: i64 = head
            .trim()
            .parse()
            .map_err(|_| fail(format!("{:?} is not an integer", head.trim())))?;
        let mut boxes = Vec::new();
        for item in tail.split(',') {
            let item = item.trim();
            let (n, d) = item
                .split_once('/')
                .ok_or_else(|| fail(format!("box {item:?} is not of the form b/a")))?;
            let n: i64 =
                n.trim().parse().map_err(|_| fail(format!("{:?} is not an integer", n.trim())))?;
            let d: i64 =
                d.trim().parse().map_err(|_| fail(format!("{:?} is not an integer", d.trim())))?;
            let b = Fraction::new(n, d).map_err(|e| fail(e.to_string()))?;
            boxes.push(b);
        }
        MontesinosForm::new(a0, boxes).map_err(|e| fail(e.to_string()))
    }
}

impl fmt::Display for MontesinosForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.a0)?;
        for (i, b) in self.boxes.iter().enumerate() {
            write!(f, "{}{b}", if i > 0 { ", " } else { " " })?;
        }
        write!(f, ")")
    }
}

/// Ports of a crossing, counterclockwise from the southwest: 0 = SW,
/// 1 = SE, 2 = NE, 3 = NW. One strand runs SW-NE, the other SE-NW.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Port {
    Crossing(usize, u8),
    Terminal(usize),
}

/// Four open corners of a partially built tangle.
#[derive(Debug, Clone, Copy)]
struct Corners {
    nw: Port,
    ne: Port,
    sw: Port,
    se: Port,
}

/// A diagram under construction: crossings, wiring between ports, and any
/// closed crossingless loops produced by splicing.
#[derive(Debug, Default)]
struct Web {
    /// Whether the SW-NE strand is the over-strand, per crossing.
    over02: Vec<bool>,
    link: HashMap<Port, Port>,
    loops: usize,
    terminals: usize,
}

impl Web {
    fn crossing(&mut self, over02: bool) -> usize {
        self.over02.push(over02);
        self.over02.len() - 1
    }

    fn terminal(&mut self) -> Port {
        self.terminals += 1;
        Port::Terminal(self.terminals - 1)
    }

    fn connect(&mut self, a: Port, b: Port) {
        debug_assert!(!self.link.contains_key(&a) && !self.link.contains_key(&b));
        self.link.insert(a, b);
        self.link.insert(b, a);
    }

    /// Remove a terminal and report what it was wired to.
    fn unlink(&mut self, t: Port) -> Port {
        let x = self.link.remove(&t).expect("terminal is wired");
        self.link.remove(&x);
        x
    }

    /// Join the wires hanging off two terminals, dropping both terminals.
    fn splice(&mut self, a: Port, b: Port) {
        let x = self.unlink(a);
        if x == b {
            // the two terminals were wired to each other: a free loop closes
            self.loops += 1;
            return;
        }
        let y = self.unlink(b);
        self.connect(x, y);
    }

    fn zero_tangle(&mut self) -> Corners {
        let c = Corners {
            nw: self.terminal(),
            ne: self.terminal(),
            sw: self.terminal(),
            se: self.terminal(),
        };
        self.connect(c.nw, c.ne);
        self.connect(c.sw, c.se);
        c
    }

    fn infinity_tangle(&mut self) -> Corners {
        let c = Corners {
            nw: self.terminal(),
            ne: self.terminal(),
            sw: self.terminal(),
            se: self.terminal(),
        };
        self.connect(c.nw, c.sw);
        self.connect(c.ne, c.se);
        c
    }

    fn reattach(&mut self, t: Port, to: Port) {
        let x = self.unlink(t);
        self.connect(x, to);
    }

    /// Append `|amount|` crossings on the east side. Positive twists put the
    /// SE-NW strand on top.
    fn twist_h(&mut self, t: &mut Corners, amount: i64) {
        for _ in 0..amount.unsigned_abs() {
            let c = self.crossing(amount < 0);
            self.reattach(t.ne, Port::Crossing(c, 3));
            self.reattach(t.se, Port::Crossing(c, 0));
            t.ne = self.terminal();
            t.se = self.terminal();
            self.connect(t.ne, Port::Crossing(c, 2));
            self.connect(t.se, Port::Crossing(c, 1));
        }
    }

    /// Append `|amount|` crossings on the south side, same sign convention.
    fn twist_v(&mut self, t: &mut Corners, amount: i64) {
        for _ in 0..amount.unsigned_abs() {
            let c = self.crossing(amount < 0);
            self.reattach(t.sw, Port::Crossing(c, 3));
            self.reattach(t.se, Port::Crossing(c, 2));
            t.sw = self.terminal();
            t.se = self.terminal();
            self.connect(t.sw, Port::Crossing(c, 0));
            self.connect(t.se, Port::Crossing(c, 1));
        }
    }

    /// Build the rational tangle of a continued fraction: twist regions
    /// alternate vertical and horizontal, ending horizontally.
    fn rational_tangle(&mut self, cf: &ContinuedFraction) -> Corners {
        let k = cf.terms().len();
        let mut t = if k % 2 == 1 { self.zero_tangle() } else { self.infinity_tangle() };
        for (i, &a) in cf.terms().iter().enumerate() {
            let horizontal = if k % 2 == 1 { i % 2 == 0 } else { i % 2 == 1 };
            if horizontal {
                self.twist_h(&mut t, a);
            } else {
                self.twist_v(&mut t, a);
            }
        }
        t
    }

    /// Place `b` east of `a` and join the facing corners.
    fn sum(&mut self, a: Corners, b: Corners) -> Corners {
        self.splice(a.ne, b.nw);
        self.splice(a.se, b.sw);
        Corners { nw: a.nw, sw: a.sw, ne: b.ne, se: b.se }
    }

    /// Close the tangle by joining the two top corners and the two bottom
    /// corners.
    fn numerator_closure(&mut self, t: Corners) {
        self.splice(t.nw, t.ne);
        self.splice(t.sw, t.se);
    }

    /// Traverse the closed diagram and emit its DT code.
    fn to_dt(&self) -> Result<DtCode, TangleError> {
        let c = self.over02.len();
        if c == 0 {
            return Err(TangleError::NotAKnot { components: self.loops });
        }
        let start = Port::Crossing(0, 0);
        let mut seen = vec![[false; 2]; c];
        let mut visits: Vec<(usize, u8)> = Vec::with_capacity(2 * c);
        let mut cur = start;
        loop {
            let Port::Crossing(ci, pi) = cur else {
                unreachable!("closed diagram has no terminals")
            };
            visits.push((ci, pi));
            seen[ci][(pi % 2) as usize] = true;
            cur = self.link[&Port::Crossing(ci, (pi + 2) % 4)];
            if cur == start {
                break;
            }
        }

        if visits.len() != 2 * c || self.loops > 0 {
            let mut components = 1 + self.loops;
            for c0 in 0..c {
                for s0 in 0..2u8 {
                    if seen[c0][s0 as usize] {
                        continue;
                    }
                    components += 1;
                    let first = Port::Crossing(c0, s0);
                    let mut cur = first;
                    loop {
                        let Port::Crossing(ci, pi) = cur else { unreachable!() };
                        seen[ci][(pi % 2) as usize] = true;
                        cur = self.link[&Port::Crossing(ci, (pi + 2) % 4)];
                        if cur == first {
                            break;
                        }
                    }
                }
            }
            return Err(TangleError::NotAKnot { components });
        }

        // pair the two visit labels at each crossing
        let mut labels: Vec<Vec<(usize, u8)>> = vec![Vec::with_capacity(2); c];
        for (label0, &(ci, pi)) in visits.iter().enumerate() {
            labels[ci].push((label0 + 1, pi % 2));
        }
        let mut values = vec![0i64; c];
        for (ci, pair) in labels.iter().enumerate() {
            let [(la, sa), (lb, sb)] = pair[..] else {
                unreachable!("each crossing is visited twice")
            };
            let ((odd, _), (even, se)) = if la % 2 == 1 { ((la, sa), (lb, sb)) } else { ((lb, sb), (la, sa)) };
            assert_eq!(odd % 2, 1, "one visit of each crossing has an odd label");
            assert_eq!(even % 2, 0, "one visit of each crossing has an even label");
            let under_at_even = if se == 0 { !self.over02[ci] } else { self.over02[ci] };
            values[(odd - 1) / 2] = if under_at_even { -(even as i64) } else { even as i64 };
        }
        Ok(DtCode::new(values).expect("traversal labels form a valid code"))
    }
}

/// The two-bridge knot that is the numerator closure of the rational tangle
/// with the given fraction. Fractions with even numerator close up into
/// two-component links and are rejected.
pub fn rational_knot(f: Fraction) -> Result<DtCode, TangleError> {
    let cf = fraction_to_cf(f);
    let mut web = Web::default();
    let t = web.rational_tangle(&cf);
    web.numerator_closure(t);
    web.to_dt()
}

/// The Montesinos diagram of a form: the rational boxes summed left to
/// right, then the integer twist region, then the numerator closure.
pub fn montesinos_diagram(form: &MontesinosForm) -> Result<DtCode, TangleError> {
    let mut web = Web::default();
    let mut acc: Option<Corners> = None;
    for b in form.boxes() {
        let t = web.rational_tangle(&fraction_to_cf(*b));
        acc = Some(match acc {
            None => t,
            Some(a) => web.sum(a, t),
        });
    }
    let mut t = acc.expect("forms have at least one box");
    if form.a0() != 0 {
        let mut extra = web.zero_tangle();
        web.twist_h(&mut extra, form.a0());
        t = web.sum(t, extra);
    }
    web.numerator_closure(t);
    web.to_dt()
}

/// Bridge index of the knot a Montesinos form presents: the number of
/// rational boxes. Valid once there are at least three boxes; with fewer the
/// knot is two-bridge or simpler and the count says nothing.
pub fn montesinos_bridge_index(form: &MontesinosForm) -> Result<usize, TangleError> {
    if form.boxes().len() < 3 {
        return Err(TangleError::RuleNotApplicable(
            "the box count is the bridge index only from three boxes up".into(),
        ));
    }
    Ok(form.boxes().len())
}

/// Schubert's classification: `b(p, q)` and `b(p2, q2)` are the same knot
/// exactly when `p == p2` and `q2` is congruent to `q` or to an inverse of
/// `q` mod p; allowing mirrors adds the two negated cases.
pub fn two_bridge_equivalent(p: i64, q: i64, p2: i64, q2: i64, allow_mirror: bool) -> bool {
    if p != p2 || p < 1 {
        return false;
    }
    if p == 1 {
        return true;
    }
    let m = p as i128;
    let r = (q as i128).rem_euclid(m);
    let r2 = (q2 as i128).rem_euclid(m);
    let prod = r * r2 % m;
    if r2 == r || prod == 1 {
        return true;
    }
    allow_mirror && (r2 == (m - r) % m || prod == m - 1)
}

/// Recover a two-bridge fraction `p/q` for a diagram: `p` is the knot
/// determinant and `q` is the least residue whose rational knot has the same
/// Alexander polynomial.
pub fn two_bridge_fraction(d: &PlanarDiagram) -> Result<Fraction, TangleError> {
    let result = alexander(d).expect("Alexander is defined for every realized diagram");
    let p = result
        .determinant
        .to_i64()
        .ok_or_else(|| TangleError::RuleNotApplicable("determinant too large".into()))?;
    if p == 1 {
        return Fraction::new(1, 1);
    }
    for q in 1..p {
        if q.gcd(&p) != 1 {
            continue;
        }
        let code = rational_knot(Fraction::new(p, q)?)?;
        let cand = realize(&code).into_diagram().expect("rational knots always realize");
        if same_alexander(d, &cand) {
            return Fraction::new(p, q);
        }
    }
    Err(TangleError::RuleNotApplicable(
        "no two-bridge fraction matches the Alexander polynomial".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dt::parse_dt;
    use crate::invariants::alexander;
    use num_bigint::BigInt;

    fn frac(n: i64, d: i64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    #[test]
    fn fraction_normalization() {
        assert_eq!(frac(2, 4), frac(1, 2));
        assert_eq!(frac(3, -2).denominator(), 2);
        assert_eq!(frac(3, -2).numerator(), -3);
        assert_eq!(frac(0, 5), frac(0, 1));
        assert_eq!(Fraction::new(1, 0), Err(TangleError::DivisionByZero));
        assert_eq!(frac(-3, 2).to_string(), "-3/2");
    }

    #[test]
    fn continued_fraction_expansions() {
        let cases: [(i64, i64, &[i64]); 10] = [
            (-1, 2, &[-2, 0]),
            (2, 3, &[2, 1, 0]),
            (-2, 3, &[-2, -1, 0]),
            (5, 2, &[2, 2]),
            (3, 2, &[2, 1]),
            (11, 1, &[11]),
            (1, 3, &[3, 0]),
            (3, 4, &[3, 1, 0]),
            (7, 1, &[7]),
            (0, 1, &[0]),
        ];
        for (n, d, want) in cases {
            let cf = fraction_to_cf(frac(n, d));
            assert_eq!(cf.terms(), want, "expansion of {n}/{d}");
            assert_eq!(cf_to_fraction(&cf).unwrap(), frac(n, d), "round trip of {n}/{d}");
        }
    }

    #[test]
    fn cf_round_trips_up_to_25() {
        for p in 1..=25i64 {
            for q in 1..p.max(2) {
                if q.gcd(&p) != 1 {
                    continue;
                }
                for num in [p, -p] {
                    let f = frac(num, q);
                    assert_eq!(cf_to_fraction(&fraction_to_cf(f)).unwrap(), f, "{num}/{q}");
                }
            }
        }
    }

    #[test]
    fn cf_division_by_zero() {
        let cf = ContinuedFraction::new(vec![0, 0]);
        assert_eq!(cf_to_fraction(&cf), Err(TangleError::DivisionByZero));
        assert_eq!(cf_to_fraction(&ContinuedFraction::new(vec![0])).unwrap(), frac(0, 1));
    }

    #[test]
    fn rational_knot_small_cases() {
        assert_eq!(rational_knot(frac(3, 2)).unwrap(), parse_dt("4 6 2").unwrap());
        assert_eq!(rational_knot(frac(5, 2)).unwrap(), parse_dt("4 6 8 2").unwrap());
        assert_eq!(rational_knot(frac(1, 2)).unwrap(), parse_dt("2 4").unwrap());
        assert_eq!(rational_knot(frac(-3, 2)).unwrap(), parse_dt("-4 -6 -2").unwrap());
        assert_eq!(rational_knot(frac(3, 4)).unwrap(), parse_dt("4 6 2 8").unwrap());
        assert_eq!(
            rational_knot(frac(11, 1)).unwrap(),
            parse_dt("12 14 16 18 20 22 2 4 6 8 10").unwrap()
        );
    }

    #[test]
    fn even_numerator_closes_to_a_link() {
        assert_eq!(rational_knot(frac(2, 3)), Err(TangleError::NotAKnot { components: 2 }));
        assert_eq!(rational_knot(frac(4, 1)), Err(TangleError::NotAKnot { components: 2 }));
        assert_eq!(rational_knot(frac(0, 1)), Err(TangleError::NotAKnot { components: 2 }));
    }

    #[test]
    fn crossing_count_matches_continued_fraction() {
        for (n, d) in [(3, 2), (5, 2), (11, 1), (7, 3), (9, 5), (25, 7)] {
            let f = frac(n, d);
            let code = rational_knot(f).unwrap();
            assert_eq!(code.n(), fraction_to_cf(f).crossing_count(), "for {n}/{d}");
        }
    }

    #[test]
    fn rational_knot_determinant_is_the_numerator() {
        for p in (3..=25i64).step_by(2) {
            for q in 1..p {
                if q.gcd(&p) != 1 {
                    continue;
                }
                let code = rational_knot(frac(p, q)).unwrap();
                let d = realize(&code).into_diagram().expect("realizable");
                let r = alexander(&d).unwrap();
                assert_eq!(r.determinant, BigInt::from(p), "determinant of b({p}, {q})");
            }
        }
    }

    #[test]
    fn montesinos_frozen_examples() {
        let f = MontesinosForm::new(
            0,
            vec![frac(-1, 2), frac(-2, 3), frac(-2, 3), frac(-2, 3)],
        )
        .unwrap();
        assert_eq!(
            montesinos_diagram(&f).unwrap(),
            parse_dt("-8 -20 -16 -12 -22 -6 -10 -4 -14 -2 -18").unwrap()
        );
        let g = MontesinosForm::new(0, vec![frac(1, 3), frac(1, 2), frac(1, 3), frac(1, 3)])
            .unwrap();
        assert_eq!(
            montesinos_diagram(&g).unwrap(),
            parse_dt("6 14 22 18 20 16 2 10 12 8 4").unwrap()
        );
    }

    #[test]
    fn montesinos_box_rules() {
        assert!(matches!(
            MontesinosForm::new(0, vec![frac(3, 1), frac(1, 2)]),
            Err(TangleError::RuleNotApplicable(_))
        ));
        assert!(matches!(
            MontesinosForm::new(2, vec![]),
            Err(TangleError::RuleNotApplicable(_))
        ));
        let two = MontesinosForm::new(0, vec![frac(1, 2), frac(1, 3)]).unwrap();
        assert!(matches!(
            montesinos_bridge_index(&two),
            Err(TangleError::RuleNotApplicable(_))
        ));
        let four =
            MontesinosForm::new(0, vec![frac(1, 2), frac(1, 3), frac(1, 3), frac(2, 3)]).unwrap();
        assert_eq!(montesinos_bridge_index(&four).unwrap(), 4);
    }

    #[test]
    fn montesinos_text_round_trip() {
        let text = "(0; -1/2, -2/3, -2/3, -2/3)";
        let f = MontesinosForm::parse(text).unwrap();
        assert_eq!(f.a0(), 0);
        assert_eq!(f.boxes().len(), 4);
        assert_eq!(f.to_string(), text);
        assert_eq!(MontesinosForm::parse(&f.to_string()).unwrap(), f);

        assert!(MontesinosForm::parse("0; 1/2").is_err());
        assert!(MontesinosForm::parse("(x; 1/2)").is_err());
        assert!(MontesinosForm::parse("(0; 1-2)").is_err());
        assert!(MontesinosForm::parse("(0; 1/0)").is_err());
        assert!(MontesinosForm::parse("(0; 3/1)").is_err());
    }

    #[test]
    fn schubert_equivalence() {
        assert!(two_bridge_equivalent(5, 2, 5, 3, false)); // 2*3 = 6 = 1 mod 5
        assert!(two_bridge_equivalent(5, 2, 5, 2, false));
        assert!(!two_bridge_equivalent(5, 2, 7, 2, false));
        assert!(!two_bridge_equivalent(3, 1, 3, -1, false));
        assert!(two_bridge_equivalent(3, 1, 3, -1, true)); // mirror trefoil
        assert!(two_bridge_equivalent(1, 0, 1, 5, false)); // unknots
    }

    #[test]
    fn fraction_recovery_for_small_two_bridge_knots() {
        for (p, q) in [(3i64, 1i64), (5, 1), (5, 2), (7, 2), (11, 1)] {
            let code = rational_knot(frac(p, q)).unwrap();
            let d = realize(&code).into_diagram().unwrap();
            let f = two_bridge_fraction(&d).unwrap();
            assert_eq!(f.numerator(), p, "p for b({p}, {q})");
            assert!(
                two_bridge_equivalent(p, q, f.numerator(), f.denominator(), true),
                "recovered {f} should be equivalent to {p}/{q} up to mirror"
            );
        }
    }
}
