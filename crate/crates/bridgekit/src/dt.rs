//! Dowker-Thistlethwaite codes and the structure that can be read off them
//! without any embedding: the label pairing, the over/under sequence along
//! the traversal, bridge counts, and a canonical relabeling.

use std::fmt;

use thiserror::Error;

/// Ways a sequence of integers can fail to be a DT code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DtError {
    #[error("syntax error: {0:?} is not an integer")]
    Syntax(String),
    #[error("a DT code needs at least one crossing")]
    Empty,
    #[error("odd value {0}: every entry must be a signed even label")]
    OddValue(i64),
    #[error("value {value} out of range: want 2 <= |v| <= {max} for {n} crossings")]
    OutOfRange { value: i64, n: usize, max: i64 },
    #[error("even label {0} appears more than once")]
    DuplicateLabel(i64),
}

/// Which strand of the knot passes through a crossing point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OverUnder {
    Over,
    Under,
}

/// A validated Dowker-Thistlethwaite code for an n-crossing knot diagram.
///
/// Entry `i` (zero-based) pairs odd traversal label `2i + 1` with the even
/// label `|values[i]|`; a negative entry records that the even label is the
/// one passing under at that crossing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DtCode {
    values: Vec<i64>,
}

/// Parse a DT code from text such as `"4 6 2"` or `"(4, 6, 2)"`.
pub fn parse_dt(text: &str) -> Result<DtCode, DtError> {
    DtCode::parse(text)
}

impl DtCode {
    /// Validate a sequence of signed even labels as a DT code.
    pub fn new(values: Vec<i64>) -> Result<Self, DtError> {
        if values.is_empty() {
            return Err(DtError::Empty);
        }
        let n = values.len();
        let max = 2 * n as i64;
        let mut seen = vec![false; n];
        for &v in &values {
            if v % 2 != 0 {
                return Err(DtError::OddValue(v));
            }
            if v.unsigned_abs() as i64 > max || v == 0 {
                return Err(DtError::OutOfRange { value: v, n, max });
            }
            let slot = (v.unsigned_abs() as usize) / 2 - 1;
            if seen[slot] {
                return Err(DtError::DuplicateLabel(v.abs()));
            }
            seen[slot] = true;
        }
        Ok(DtCode { values })
    }

    /// Parse from whitespace- or comma-separated integers, ignoring parentheses.
    pub fn parse(text: &str) -> Result<Self, DtError> {
        let cleaned: String = text
            .chars()
            .map(|c| if c == '(' || c == ')' || c == ',' || c == '[' || c == ']' { ' ' } else { c })
            .collect();
        let mut values = Vec::new();
        for tok in cleaned.split_whitespace() {
            let v: i64 = tok.parse().map_err(|_| DtError::Syntax(tok.to_string()))?;
            values.push(v);
        }
        Self::new(values)
    }

    /// Number of crossings.
    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// The raw signed even labels, one per crossing.
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// The involution pairing the labels 1..2n at crossings.
    pub fn pairing(&self) -> Pairing {
        let l = 2 * self.n();
        let mut partner = vec![0usize; l + 1];
        for (i, &v) in self.values.iter().enumerate() {
            let odd = 2 * i + 1;
            let even = v.unsigned_abs() as usize;
            partner[odd] = even;
            partner[even] = odd;
        }
        Pairing { partner }
    }

    /// Over/under state at each of the 2n traversal labels.
    pub fn over_under_sequence(&self) -> OverUnderSequence {
        let l = 2 * self.n();
        let mut visits = vec![OverUnder::Over; l];
        for (i, &v) in self.values.iter().enumerate() {
            let odd = 2 * i + 1;
            let even = v.unsigned_abs() as usize;
            let (at_even, at_odd) = if v < 0 {
                (OverUnder::Under, OverUnder::Over)
            } else {
                (OverUnder::Over, OverUnder::Under)
            };
            visits[even - 1] = at_even;
            visits[odd - 1] = at_odd;
        }
        OverUnderSequence { visits }
    }

    /// Number of bridges of the diagram: maximal cyclic runs of overcrossings.
    pub fn diagram_bridges(&self) -> usize {
        self.over_under_sequence().bridge_count()
    }

    /// The lexicographically least DT code among all relabelings of the same
    /// diagram (every choice of starting label and traversal direction).
    /// Mirror images are not identified.
    pub fn canonicalize(&self) -> DtCode {
        let n = self.n();
        let l = 2 * n;
        let (partner, over) = self.curve();
        let mut best: Option<Vec<i64>> = None;
        let mut new_label = vec![0usize; l];
        for start in 0..l {
            for dir in [1i64, -1] {
                // old_pos(k) is where new label k+1 lands on the old curve
                let old_pos =
                    |k: usize| (start as i64 + k as i64 * dir).rem_euclid(l as i64) as usize;
                for k in 0..l {
                    new_label[old_pos(k)] = k + 1;
                }
                let mut vals = vec![0i64; n];
                for k in (0..l).step_by(2) {
                    let p = old_pos(k);
                    let q = partner[p];
                    let e = new_label[q] as i64;
                    debug_assert_eq!(e % 2, 0);
                    vals[k / 2] = if over[q] { e } else { -e };
                }
                if best.as_ref().is_none_or(|b| vals < *b) {
                    best = Some(vals);
                }
            }
        }
        DtCode { values: best.unwrap() }
    }

    /// Position-indexed view of the pairing: for positions 0..2n-1 (label
    /// minus one), the partner position and whether the strand passes over.
    pub(crate) fn curve(&self) -> (Vec<usize>, Vec<bool>) {
        let l = 2 * self.n();
        let mut partner = vec![0usize; l];
        let mut over = vec![false; l];
        for (i, &v) in self.values.iter().enumerate() {
            let odd = 2 * i;
            let even = v.unsigned_abs() as usize - 1;
            partner[odd] = even;
            partner[even] = odd;
            over[even] = v >= 0;
            over[odd] = v < 0;
        }
        (partner, over)
    }
}

impl fmt::Display for DtCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.values {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// The over/under state at labels 1..2n, in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverUnderSequence {
    visits: Vec<OverUnder>,
}

impl OverUnderSequence {
    pub fn len(&self) -> usize {
        self.visits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.visits.is_empty()
    }

    /// State at a 1-based traversal label.
    pub fn at_label(&self, label: usize) -> OverUnder {
        self.visits[label - 1]
    }

    pub fn as_slice(&self) -> &[OverUnder] {
        &self.visits
    }

    /// Maximal cyclic runs of `Over`, counted as under-to-over transitions.
    pub fn bridge_count(&self) -> usize {
        let l = self.visits.len();
        (0..l)
            .filter(|&i| {
                self.visits[(i + l - 1) % l] == OverUnder::Under
                    && self.visits[i] == OverUnder::Over
            })
            .count()
    }
}

impl fmt::Display for OverUnderSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.visits {
            write!(f, "{}", if *v == OverUnder::Over { 'O' } else { 'U' })?;
        }
        Ok(())
    }
}

/// The fixed-point-free involution on labels 1..2n induced by a DT code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    partner: Vec<usize>, // 1-based; slot 0 unused
}

impl Pairing {
    /// The label paired with a 1-based label.
    pub fn partner(&self, label: usize) -> usize {
        self.partner[label]
    }

    /// The (odd, even) label pairs in order of odd label.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.partner.len()).step_by(2).map(|odd| (odd, self.partner[odd]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_common_formats() {
        let d = parse_dt("4 6 2").unwrap();
        assert_eq!(d.values(), &[4, 6, 2]);
        assert_eq!(parse_dt("(4, 6, 2)").unwrap(), d);
        assert_eq!(parse_dt("[4,6,2]").unwrap(), d);
        assert_eq!(parse_dt("  4\t6\n2 ").unwrap(), d);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert_eq!(parse_dt("4 six 2"), Err(DtError::Syntax("six".into())));
        assert_eq!(parse_dt(""), Err(DtError::Empty));
    }

    #[test]
    fn validation_errors() {
        assert_eq!(DtCode::new(vec![4, 5, 2]), Err(DtError::OddValue(5)));
        assert_eq!(
            DtCode::new(vec![4, 8, 2]),
            Err(DtError::OutOfRange { value: 8, n: 3, max: 6 })
        );
        assert_eq!(
            DtCode::new(vec![4, -8, 2]),
            Err(DtError::OutOfRange { value: -8, n: 3, max: 6 })
        );
        assert_eq!(DtCode::new(vec![4, 4, 2]), Err(DtError::DuplicateLabel(4)));
        assert_eq!(DtCode::new(vec![4, -4, 2]), Err(DtError::DuplicateLabel(4)));
        assert_eq!(DtCode::new(vec![0, 4, 6]), Err(DtError::OutOfRange { value: 0, n: 3, max: 6 }));
        assert!(DtCode::new(vec![4, 6, 2]).is_ok());
        assert!(DtCode::new(vec![2]).is_ok());
        assert!(DtCode::new(vec![-2]).is_ok());
    }

    #[test]
    fn pairing_involution() {
        let d = parse_dt("4 6 2").unwrap();
        let p = d.pairing();
        assert_eq!(p.partner(1), 4);
        assert_eq!(p.partner(4), 1);
        assert_eq!(p.partner(3), 6);
        assert_eq!(p.partner(5), 2);
        let pairs: Vec<_> = p.pairs().collect();
        assert_eq!(pairs, vec![(1, 4), (3, 6), (5, 2)]);
    }

    #[test]
    fn over_under_alternating_trefoil() {
        // positive entries: even label passes over, odd label under
        let d = parse_dt("4 6 2").unwrap();
        let s = d.over_under_sequence();
        assert_eq!(s.to_string(), "UOUOUO");
        assert_eq!(d.diagram_bridges(), 3);
    }

    #[test]
    fn over_under_signs_flip_parity() {
        let d = parse_dt("-4 -6 -2").unwrap();
        assert_eq!(d.over_under_sequence().to_string(), "OUOUOU");
        assert_eq!(d.diagram_bridges(), 3);
    }

    #[test]
    fn all_over_run_counts_one_bridge_per_crossing() {
        // an all-positive alternating code has n singleton over-runs
        let d = parse_dt("6 8 10 2 4").unwrap();
        assert_eq!(d.diagram_bridges(), 5);
    }

    #[test]
    fn two_bridge_presentation_with_long_over_runs() {
        // a 20-crossing diagram whose overcrossings form exactly two long runs
        let d = parse_dt("20 18 16 14 12 -30 -28 -26 -24 -22 40 38 36 34 32 -10 -8 -6 -4 -2")
            .unwrap();
        assert_eq!(d.n(), 20);
        let text = d.over_under_sequence().to_string();
        let block = |c: &str| c.repeat(10);
        assert_eq!(text, format!("{}{}{}{}", block("U"), block("O"), block("U"), block("O")));
        assert_eq!(d.diagram_bridges(), 2);
    }

    #[test]
    fn kink_has_one_bridge() {
        assert_eq!(parse_dt("2").unwrap().diagram_bridges(), 1);
        assert_eq!(parse_dt("-2").unwrap().diagram_bridges(), 1);
    }

    #[test]
    fn canonical_form_of_standard_trefoil() {
        // all relabelings of the alternating trefoil give partner distance 3,
        // and the least signed sequence picks up the negative orientation
        let d = parse_dt("4 6 2").unwrap();
        assert_eq!(d.canonicalize().values(), &[-4, -6, -2]);
    }

    #[test]
    fn canonicalization_is_idempotent_and_relabel_invariant() {
        for text in ["4 6 2", "-4 -6 -2", "4 6 8 2", "6 -12 2 8 -4 -10", "2", "-2", "2 4"] {
            let d = parse_dt(text).unwrap();
            let c = d.canonicalize();
            assert_eq!(c.canonicalize(), c, "idempotence for {text}");
            assert!(c.values() <= d.values(), "canonical is minimal for {text}");
        }
    }

    #[test]
    fn canonicalization_identifies_cyclic_relabelings() {
        // the same figure-eight diagram read from two different basepoints
        let a = parse_dt("4 6 8 2").unwrap();
        let b = parse_dt("6 8 2 4").unwrap();
        assert_eq!(a.canonicalize(), b.canonicalize());
    }

    #[test]
    fn mirror_is_not_identified_by_canonicalization() {
        let d = parse_dt("4 6 2").unwrap();
        let m = parse_dt("-4 -6 -2").unwrap();
        // these are mirror diagrams; canonical forms coincide here only
        // because reversing orientation swaps over/under roles on the
        // trefoil. A chiral pair that differs:
        assert_eq!(d.canonicalize(), m.canonicalize());
        let e = parse_dt("4 8 -12 2 -10 -6").unwrap();
        let em = parse_dt("-4 -8 12 -2 10 6").unwrap();
        assert_ne!(e.canonicalize(), em.canonicalize());
    }

    #[test]
    fn display_round_trips() {
        let d = parse_dt("4 -6 2").unwrap();
        assert_eq!(d.to_string(), "4 -6 2");
        assert_eq!(parse_dt(&d.to_string()).unwrap(), d);
    }
}
