//! Spherical realization of DT codes. Decides whether a code is the code of
//! an actual knot projection on the sphere and, when it is, produces a
//! combinatorial planar diagram with crossing signs and PD notation.
//!
//! The method splits the curve at connect sums, reduces each prime piece to
//! a planarity question on a small auxiliary graph (one 4-cycle plus a
//! diagonal per crossing, tied together by the strand arcs), and reads the
//! diagram's rotation system back off the embedding. Every successful
//! realization is certified on the spot by an Euler count: a sphere diagram
//! with n crossings must bound exactly n + 2 faces.

mod planar;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::dt::{DtCode, OverUnderSequence};
use planar::planar_embedding;

/// Arc attachment point at a crossing: the strand arriving at traversal
/// position p, or the strand departing from it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum End {
    In,
    Out,
}

type Slot = (usize, End);

fn twin(s: Slot, l: usize) -> Slot {
    match s {
        (p, End::In) => ((p + l - 1) % l, End::Out),
        (p, End::Out) => ((p + 1) % l, End::In),
    }
}

/// One crossing of a realized diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Crossing {
    /// +1 or -1.
    pub sign: i8,
    /// PD notation: the four incident arcs counterclockwise, starting from
    /// the incoming under-strand. Arcs are numbered 1..2n along the knot.
    pub pd: [usize; 4],
}

/// A knot diagram on the sphere: the curve data of a DT code together with
/// a rotation system certified to have spherical Euler characteristic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    partner: Vec<usize>,
    over: Vec<bool>,
    rotations: BTreeMap<usize, [Slot; 4]>,
    crossings: Vec<Crossing>,
}

/// The outcome of attempting to realize a DT code on the sphere.
#[derive(Debug, Clone)]
pub enum RealizabilityReport {
    Realizable(PlanarDiagram),
    NotRealizable { obstruction: String },
}

impl RealizabilityReport {
    pub fn is_realizable(&self) -> bool {
        matches!(self, RealizabilityReport::Realizable(_))
    }

    pub fn diagram(&self) -> Option<&PlanarDiagram> {
        match self {
            RealizabilityReport::Realizable(d) => Some(d),
            RealizabilityReport::NotRealizable { .. } => None,
        }
    }

    pub fn into_diagram(self) -> Option<PlanarDiagram> {
        match self {
            RealizabilityReport::Realizable(d) => Some(d),
            RealizabilityReport::NotRealizable { .. } => None,
        }
    }

    pub fn obstruction(&self) -> Option<&str> {
        match self {
            RealizabilityReport::Realizable(_) => None,
            RealizabilityReport::NotRealizable { obstruction } => Some(obstruction),
        }
    }
}

/// Try to realize a DT code as a knot projection on the sphere.
pub fn realize(code: &DtCode) -> RealizabilityReport {
    let (partner, over) = code.curve();
    match realize_curve(&partner) {
        Ok(rotations) => {
            let d = PlanarDiagram::from_parts(partner, over, rotations, true);
            RealizabilityReport::Realizable(d)
        }
        Err(positions) => {
            let labels: Vec<usize> = positions.iter().map(|p| p + 1).collect();
            RealizabilityReport::NotRealizable {
                obstruction: format!(
                    "no spherical embedding: the subdiagram on labels {labels:?} forces a crossing"
                ),
            }
        }
    }
}

/// Whether the code admits a spherical realization at all.
pub fn is_realizable(code: &DtCode) -> bool {
    realize(code).is_realizable()
}

impl PlanarDiagram {
    fn from_parts(
        partner: Vec<usize>,
        over: Vec<bool>,
        mut rotations: BTreeMap<usize, [Slot; 4]>,
        normalize_reflection: bool,
    ) -> Self {
        let l = partner.len();
        let n = l / 2;
        let faces = count_faces(l, &rotations);
        assert_eq!(faces, n + 2, "spherical embedding must have n + 2 faces");

        // A rotation system from planarity is only determined up to reversing
        // every rotation at once (the two reflections of the sphere). Fix the
        // reflection so the crossing at label 1 is positive.
        if normalize_reflection {
            let first = rotations.get(&0).expect("crossing at position 0");
            if crossing_sign(first, &over) < 0 {
                for rot in rotations.values_mut() {
                    rot.reverse();
                }
            }
        }

        let mut crossings = Vec::with_capacity(n);
        for (&p, rot) in &rotations {
            let q = partner[p];
            let sign = crossing_sign(rot, &over);
            let under = if over[p] { q } else { p };
            let start = rot
                .iter()
                .position(|&s| s == (under, End::In))
                .expect("under-in slot present");
            let mut pd = [0usize; 4];
            for (j, t) in pd.iter_mut().enumerate() {
                *t = arc_of_slot(rot[(start + j) % 4], l);
            }
            crossings.push(Crossing { sign, pd });
        }

        PlanarDiagram { partner, over, rotations, crossings }
    }

    /// Number of crossings.
    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    /// Crossings ordered by their smaller traversal label.
    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    /// The over/under sequence along the traversal, as recorded in the code.
    pub fn over_under_sequence(&self) -> OverUnderSequence {
        let code = self.dt_code();
        code.over_under_sequence()
    }

    /// Recover the DT code this diagram realizes.
    pub fn dt_code(&self) -> DtCode {
        let l = self.partner.len();
        let mut values = vec![0i64; l / 2];
        for p in (0..l).step_by(2) {
            let q = self.partner[p];
            let e = (q + 1) as i64;
            values[p / 2] = if self.over[q] { e } else { -e };
        }
        DtCode::new(values).expect("diagram data is a valid code")
    }

    /// The same diagram reflected, swapping every crossing sign.
    pub fn mirror(&self) -> PlanarDiagram {
        let mut rotations = self.rotations.clone();
        for rot in rotations.values_mut() {
            rot.reverse();
        }
        PlanarDiagram::from_parts(self.partner.clone(), self.over.clone(), rotations, false)
    }

    /// PD notation, one `X a b c d` line per crossing.
    pub fn pd_text(&self) -> String {
        let mut out = String::new();
        for c in &self.crossings {
            out.push_str(&format!("X {} {} {} {}\n", c.pd[0], c.pd[1], c.pd[2], c.pd[3]));
        }
        out
    }

    /// Position-indexed pairing: for traversal positions 0..2n-1, the
    /// partner position at the same crossing.
    pub(crate) fn partner(&self) -> &[usize] {
        &self.partner
    }

    /// Whether the strand at each traversal position passes over.
    pub(crate) fn over(&self) -> &[bool] {
        &self.over
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pd_text())
    }
}

fn arc_of_slot(s: Slot, l: usize) -> usize {
    match s {
        (p, End::In) => {
            if p == 0 {
                l
            } else {
                p
            }
        }
        (p, End::Out) => p + 1,
    }
}

/// Sign of a crossing from the cyclic order of its four strand ends. The two
/// strands alternate around the crossing; the relative placement of the
/// over-in end against the under ends decides the sign.
fn crossing_sign(rot: &[Slot; 4], over: &[bool]) -> i8 {
    let kind = |s: Slot| (over[s.0], matches!(s.1, End::In));
    let pos = [(true, true), (false, true), (true, false), (false, false)];
    let neg = [(true, true), (false, false), (true, false), (false, true)];
    for shift in 0..4 {
        let arr = [
            kind(rot[shift]),
            kind(rot[(shift + 1) % 4]),
            kind(rot[(shift + 2) % 4]),
            kind(rot[(shift + 3) % 4]),
        ];
        if arr == pos {
            return 1;
        }
        if arr == neg {
            return -1;
        }
    }
    unreachable!("strands do not alternate around a crossing")
}

/// Count orbits of slot -> successor(twin(slot)): the faces cut out by the
/// rotation system.
fn count_faces(l: usize, rotations: &BTreeMap<usize, [Slot; 4]>) -> usize {
    let mut succ: HashMap<Slot, Slot> = HashMap::new();
    for rot in rotations.values() {
        for i in 0..4 {
            succ.insert(rot[i], rot[(i + 1) % 4]);
        }
    }
    debug_assert_eq!(succ.len(), 2 * l);
    let mut seen: HashSet<Slot> = HashSet::new();
    let mut faces = 0;
    for p in 0..l {
        for s in [(p, End::In), (p, End::Out)] {
            if seen.contains(&s) {
                continue;
            }
            faces += 1;
            let mut cur = s;
            while seen.insert(cur) {
                cur = succ[&twin(cur, l)];
            }
        }
    }
    faces
}

/// Realize the pairing as rotation systems keyed by each crossing's smaller
/// position, or report the positions of a nonrealizable prime piece.
fn realize_curve(partner: &[usize]) -> Result<BTreeMap<usize, [Slot; 4]>, Vec<usize>> {
    let l = partner.len();
    if l == 2 {
        let rot = [(0, End::In), (1, End::In), (0, End::Out), (1, End::Out)];
        return Ok(BTreeMap::from([(0, rot)]));
    }
    if let Some((s, len)) = find_closed_interval(partner) {
        // connect sum: realize the two halves separately and overlay them
        let inner: Vec<usize> = (0..len).map(|k| (s + k) % l).collect();
        let outer: Vec<usize> = (0..l - len).map(|k| (s + len + k) % l).collect();
        let mut merged = BTreeMap::new();
        for posset in [inner, outer] {
            let mut index_of = HashMap::new();
            for (k, &p) in posset.iter().enumerate() {
                index_of.insert(p, k);
            }
            let sub_partner: Vec<usize> =
                posset.iter().map(|&p| index_of[&partner[p]]).collect();
            let sub = match realize_curve(&sub_partner) {
                Ok(sub) => sub,
                Err(positions) => {
                    let mut orig: Vec<usize> = positions.iter().map(|&k| posset[k]).collect();
                    orig.sort_unstable();
                    return Err(orig);
                }
            };
            for (_, rot) in sub {
                let mapped: [Slot; 4] = rot.map(|(p, d)| (posset[p], d));
                let key = mapped.iter().map(|&(p, _)| p).min().unwrap();
                merged.insert(key, mapped);
            }
        }
        Ok(merged)
    } else {
        realize_prime(partner)
    }
}

/// The shortest proper cyclic interval of positions closed under the pairing,
/// if any. Such an interval is one side of a connect sum.
fn find_closed_interval(partner: &[usize]) -> Option<(usize, usize)> {
    let l = partner.len();
    let mut best: Option<(usize, usize)> = None;
    let mut inside = vec![false; l];
    for s in 0..l {
        inside.iter_mut().for_each(|b| *b = false);
        let mut depth: i64 = 0;
        for len in 1..l {
            let x = (s + len - 1) % l;
            inside[x] = true;
            if inside[partner[x]] {
                depth -= 1;
            } else {
                depth += 1;
            }
            if depth == 0 {
                if len > 1 && len < l && best.is_none_or(|(_, bl)| len < bl) {
                    best = Some((s, len));
                }
                break;
            }
        }
    }
    best
}

/// Realize a prime, kink-free pairing via planarity of the crossing-gadget
/// graph: each crossing becomes a 4-cycle with one diagonal (vertices 4i..4i+3,
/// strand ends at the four corners), and each arc of the curve becomes an edge
/// between the corners it joins. The gadget admits a planar embedding exactly
/// when the curve embeds in the sphere, and the embedding's rotations, after
/// contracting each gadget, are the diagram's rotations.
fn realize_prime(partner: &[usize]) -> Result<BTreeMap<usize, [Slot; 4]>, Vec<usize>> {
    let l = partner.len();
    let n = l / 2;
    let nonplanar = || (0..l).collect::<Vec<_>>();

    let mins: Vec<usize> = (0..l).filter(|&p| p < partner[p]).collect();
    let mut idx_of_min = vec![usize::MAX; l];
    for (i, &m) in mins.iter().enumerate() {
        idx_of_min[m] = i;
    }
    let corner = |s: Slot| -> usize {
        let (p, d) = s;
        let c = p.min(partner[p]);
        let base = 4 * idx_of_min[c];
        match (p == c, d) {
            (true, End::In) => base,
            (false, End::In) => base + 1,
            (true, End::Out) => base + 2,
            (false, End::Out) => base + 3,
        }
    };

    let mut edges: Vec<(usize, usize)> = Vec::with_capacity(7 * n);
    for i in 0..n {
        let b = 4 * i;
        edges.extend([(b, b + 1), (b + 1, b + 2), (b + 2, b + 3), (b + 3, b), (b, b + 2)]);
    }
    let mut arc_of_edge: HashMap<(usize, usize), usize> = HashMap::new();
    for i in 0..l {
        let a = corner((i, End::Out));
        let b = corner(((i + 1) % l, End::In));
        debug_assert_ne!(a / 4, b / 4, "kinks must be split off before this point");
        edges.push((a, b));
        arc_of_edge.insert((a.min(b), a.max(b)), i);
    }

    let emb = planar_embedding(4 * n, &edges).ok_or_else(nonplanar)?;

    // contract each gadget: walk its four corner rotations as one merged
    // rotation, then keep only the four strand attachments
    let mut out = BTreeMap::new();
    for (idx, &minpos) in mins.iter().enumerate() {
        let base = 4 * idx;
        let mut merged: Vec<(usize, usize)> =
            emb.rotations[base].iter().map(|&x| (base, x)).collect();
        for k in 1..4 {
            let host = base + k - 1;
            let target = base + k;
            let j0 = merged
                .iter()
                .position(|&(h, x)| h == host && x == target)
                .expect("gadget quad edge present in merged rotation");
            let nb = &emb.rotations[target];
            let j = nb.iter().position(|&x| x == host).unwrap();
            let fan: Vec<(usize, usize)> =
                (1..nb.len()).map(|d| (target, nb[(j + d) % nb.len()])).collect();
            merged.splice(j0..=j0, fan);
        }
        merged.retain(|&(_, x)| !(base..base + 4).contains(&x));
        assert_eq!(merged.len(), 4, "contracted gadget keeps its four strand ends");

        let mut rot = [(0usize, End::In); 4];
        for (slot, &(host, x)) in rot.iter_mut().zip(&merged) {
            let k = (host.min(x), host.max(x));
            let arc = arc_of_edge[&k];
            *slot = if corner((arc, End::Out)) == host {
                (arc, End::Out)
            } else {
                debug_assert_eq!(corner(((arc + 1) % l, End::In)), host);
                ((arc + 1) % l, End::In)
            };
        }
        out.insert(minpos, rot);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dt::parse_dt;

    fn diagram(text: &str) -> PlanarDiagram {
        realize(&parse_dt(text).unwrap()).into_diagram().expect("realizable")
    }

    #[test]
    fn positive_kink() {
        let d = diagram("2");
        assert_eq!(d.pd_text(), "X 2 2 1 1\n");
        assert_eq!(d.writhe(), 1);
    }

    #[test]
    fn kink_reflection_convention() {
        // the code alone cannot distinguish a diagram from its reflection,
        // so realization always points the first crossing positive
        let d = diagram("-2");
        assert_eq!(d.writhe(), 1);
    }

    #[test]
    fn double_kink() {
        let d = diagram("2 4");
        assert_eq!(d.n(), 2);
        assert_eq!(d.writhe(), 2);
        assert_eq!(d.crossings()[0].sign, 1);
        assert_eq!(d.crossings()[1].sign, 1);
    }

    #[test]
    fn trefoil_realizes_with_full_writhe() {
        let d = diagram("4 6 2");
        assert_eq!(d.n(), 3);
        assert_eq!(d.writhe().abs(), 3);
        assert_eq!(d.writhe(), 3, "reflection convention picks the positive trefoil");
    }

    #[test]
    fn figure_eight_has_zero_writhe() {
        let d = diagram("4 6 8 2");
        assert_eq!(d.writhe(), 0);
        let signs: Vec<i8> = d.crossings().iter().map(|c| c.sign).collect();
        assert_eq!(signs.iter().filter(|&&s| s == 1).count(), 2);
    }

    #[test]
    fn smallest_nonrealizable_code() {
        // the least five-crossing code that pairs labels in a way no sphere
        // curve can achieve
        let code = parse_dt("-8 -10 -2 -4 -6").unwrap();
        let r = realize(&code);
        assert!(!r.is_realizable());
        assert!(r.obstruction().unwrap().contains("no spherical embedding"));
        assert!(!is_realizable(&code));
    }

    #[test]
    fn positive_variant_of_nonrealizable_pairing_also_fails() {
        // realizability only depends on the pairing, not the signs
        assert!(!is_realizable(&parse_dt("8 10 2 4 6").unwrap()));
    }

    #[test]
    fn composite_of_two_trefoils() {
        // granny knot style connect sum, labels interleaved across halves
        let d = diagram("4 6 2 10 12 8");
        assert_eq!(d.n(), 6);
    }

    #[test]
    fn mirror_flips_every_sign() {
        let d = diagram("4 6 2");
        let m = d.mirror();
        assert_eq!(m.writhe(), -3);
        for (c, mc) in d.crossings().iter().zip(m.crossings()) {
            assert_eq!(mc.sign, -c.sign);
        }
        assert_eq!(m.mirror(), d);
    }

    #[test]
    fn mirror_reverses_pd_tuples_in_place() {
        let d = diagram("4 6 8 2");
        let m = d.mirror();
        for (c, mc) in d.crossings().iter().zip(m.crossings()) {
            assert_eq!(mc.pd, [c.pd[0], c.pd[3], c.pd[2], c.pd[1]]);
        }
    }

    #[test]
    fn arcs_cover_one_to_two_n() {
        let d = diagram("4 6 8 2");
        let mut seen = vec![0usize; 2 * d.n() + 1];
        for c in d.crossings() {
            for &a in &c.pd {
                assert!((1..=2 * d.n()).contains(&a));
                seen[a] += 1;
            }
        }
        // every arc has two endpoints
        assert!(seen[1..].iter().all(|&k| k == 2));
    }

    #[test]
    fn pd_starts_at_incoming_understrand() {
        // arc a enters crossing as under-strand, so arc a+1 leaves two slots later
        let d = diagram("4 6 2");
        for c in d.crossings() {
            let a = c.pd[0];
            let next = if a == 2 * d.n() { 1 } else { a + 1 };
            assert_eq!(c.pd[2], next);
        }
    }

    #[test]
    fn code_round_trips_through_diagram() {
        for text in ["2", "-2", "4 6 2", "-4 -6 -2", "4 6 8 2", "4 6 2 10 12 8"] {
            let code = parse_dt(text).unwrap();
            let d = realize(&code).into_diagram().unwrap();
            assert_eq!(d.dt_code(), code, "for {text}");
        }
    }

    #[test]
    fn realization_is_deterministic() {
        let a = diagram("4 6 8 2").pd_text();
        let b = diagram("4 6 8 2").pd_text();
        assert_eq!(a, b);
    }

    #[test]
    fn over_under_matches_code() {
        let code = parse_dt("6 -12 2 8 -4 -10").unwrap();
        if let Some(d) = realize(&code).into_diagram() {
            assert_eq!(d.over_under_sequence(), code.over_under_sequence());
        }
    }
}
