//! A brute-force realizability oracle, independent of the library's gadget
//! construction: try every assignment of the two transversal rotation
//! schemes at each crossing and accept when some assignment closes up with
//! the spherical face count.

#![allow(dead_code)]

use bridgekit::DtCode;

/// Slots are (position, side) pairs, side 0 entering and side 1 leaving, so
/// slot index = 2 * position + side.
fn twin(slot: usize, l: usize) -> usize {
    let (p, side) = (slot / 2, slot % 2);
    if side == 0 {
        2 * ((p + l - 1) % l) + 1
    } else {
        2 * ((p + 1) % l)
    }
}

/// Count face orbits for one rotation assignment, given per-crossing slot
/// cycles in `succ`.
fn faces(succ: &[usize], l: usize) -> usize {
    let mut seen = vec![false; 2 * l];
    let mut count = 0;
    for start in 0..2 * l {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut s = start;
        while !seen[s] {
            seen[s] = true;
            s = succ[twin(s, l)];
        }
    }
    count
}

/// Whether some choice of rotations embeds the curve in the sphere.
pub fn oracle_realizable(code: &DtCode) -> bool {
    let n = code.n();
    let l = 2 * n;

    let mut partner = vec![0usize; l];
    for (i, &v) in code.values().iter().enumerate() {
        let a = 2 * i;
        let b = v.unsigned_abs() as usize - 1;
        partner[a] = b;
        partner[b] = a;
    }
    let crossings: Vec<(usize, usize)> =
        (0..l).filter(|&p| p < partner[p]).map(|p| (p, partner[p])).collect();
    assert_eq!(crossings.len(), n);

    let mut succ = vec![0usize; 2 * l];
    for mask in 0u32..(1 << n) {
        for (k, &(p, q)) in crossings.iter().enumerate() {
            // the two ways the strands can cross transversally
            let cycle: [usize; 4] = if mask >> k & 1 == 0 {
                [2 * p, 2 * q, 2 * p + 1, 2 * q + 1]
            } else {
                [2 * p, 2 * q + 1, 2 * p + 1, 2 * q]
            };
            for i in 0..4 {
                succ[cycle[i]] = cycle[(i + 1) % 4];
            }
        }
        if faces(&succ, l) == n + 2 {
            return true;
        }
    }
    false
}

/// All valid codes with n crossings: every arrangement of the even labels
/// with every sign pattern.
pub fn all_codes(n: usize) -> Vec<DtCode> {
    let evens: Vec<i64> = (1..=n as i64).map(|k| 2 * k).collect();
    let mut out = Vec::new();
    permute(&mut evens.clone(), 0, &mut |perm| {
        for mask in 0u32..(1 << n) {
            let values: Vec<i64> =
                perm.iter().enumerate().map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v }).collect();
            out.push(DtCode::new(values).expect("signed arrangements are valid codes"));
        }
    });
    out
}

fn permute(items: &mut [i64], k: usize, visit: &mut impl FnMut(&[i64])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}
