//! Planarity testing with rotation-system extraction for simple 2-connected
//! graphs. Classic incremental face splitting: embed a cycle, then repeatedly
//! pick an unembedded fragment, a face containing all of its attachment
//! vertices, and route one path of the fragment through that face. If some
//! fragment has no admissible face the graph is nonplanar.

use std::collections::HashMap;

/// A combinatorial embedding: for each vertex its neighbors in cyclic order,
/// with one orientation sense shared by every vertex.
pub(crate) struct Embedding {
    pub rotations: Vec<Vec<usize>>,
}

#[derive(Debug)]
enum Fragment {
    /// A single unembedded edge whose endpoints are both embedded.
    Chord(usize, usize),
    /// A connected component of unembedded vertices, with the embedded
    /// vertices adjacent to it (sorted, deduplicated).
    Component { members: Vec<usize>, attachments: Vec<usize> },
}

impl Fragment {
    fn attachments(&self) -> Vec<usize> {
        match self {
            Fragment::Chord(u, v) => vec![*u, *v],
            Fragment::Component { attachments, .. } => attachments.clone(),
        }
    }
}

/// Compute a planar embedding of the simple 2-connected graph on vertices
/// `0..n` with the given edges, or None if it is nonplanar.
pub(crate) fn planar_embedding(n: usize, edges: &[(usize, usize)]) -> Option<Embedding> {
    assert!(n >= 3 && edges.len() >= 3, "need a 2-connected input");
    if edges.len() > 3 * n - 6 {
        return None;
    }

    let mut adj = vec![Vec::new(); n];
    let mut edge_id = HashMap::new();
    for (id, &(u, v)) in edges.iter().enumerate() {
        assert!(u != v, "no self-loops");
        assert!(edge_id.insert(key(u, v), id).is_none(), "no parallel edges");
        adj[u].push(v);
        adj[v].push(u);
    }

    let mut embedded_edge = vec![false; edges.len()];
    let mut in_h = vec![false; n];
    // live faces as directed-edge walks; None marks a face split away
    let mut faces: Vec<Option<Vec<(usize, usize)>>> = Vec::new();

    let cycle = some_cycle(&adj);
    let k = cycle.len();
    let fwd: Vec<(usize, usize)> = (0..k).map(|i| (cycle[i], cycle[(i + 1) % k])).collect();
    let rev: Vec<(usize, usize)> = fwd.iter().rev().map(|&(u, v)| (v, u)).collect();
    faces.push(Some(fwd));
    faces.push(Some(rev));
    let mut remaining = edges.len();
    for i in 0..k {
        in_h[cycle[i]] = true;
        embedded_edge[edge_id[&key(cycle[i], cycle[(i + 1) % k])]] = true;
        remaining -= 1;
    }

    while remaining > 0 {
        let fragments = find_fragments(&adj, edges, &embedded_edge, &in_h);
        assert!(!fragments.is_empty(), "edges remain but no fragment found");

        // which live faces each embedded vertex lies on
        let mut faces_of: HashMap<usize, Vec<usize>> = HashMap::new();
        for (fid, face) in faces.iter().enumerate() {
            if let Some(walk) = face {
                for &(src, _) in walk {
                    faces_of.entry(src).or_default().push(fid);
                }
            }
        }

        let mut choice: Option<(usize, usize)> = None; // fragment index, face id
        for (fi, frag) in fragments.iter().enumerate() {
            let atts = frag.attachments();
            let mut admissible = faces_of.get(&atts[0]).cloned().unwrap_or_default();
            for a in &atts[1..] {
                let fa = faces_of.get(a).map(Vec::as_slice).unwrap_or(&[]);
                admissible.retain(|f| fa.contains(f));
            }
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, fid) = choice.unwrap();

        let path = fragment_path(&fragments[fi], &adj, &in_h);
        debug_assert!(path.len() >= 2);

        // split the face along the path
        let walk = faces[fid].take().unwrap();
        let a = path[0];
        let b = *path.last().unwrap();
        let ia = walk.iter().position(|&(s, _)| s == a).unwrap();
        let ib = walk.iter().position(|&(s, _)| s == b).unwrap();
        let len = walk.len();
        let seg = |from: usize, to: usize| -> Vec<(usize, usize)> {
            let mut out = Vec::new();
            let mut i = from;
            while i != to {
                out.push(walk[i]);
                i = (i + 1) % len;
            }
            out
        };
        let pe_ab: Vec<(usize, usize)> = path.windows(2).map(|w| (w[0], w[1])).collect();
        let pe_ba: Vec<(usize, usize)> = pe_ab.iter().rev().map(|&(u, v)| (v, u)).collect();
        let mut face_a = seg(ia, ib); // a -> ... -> b along the old boundary
        face_a.extend(pe_ba.iter().copied());
        let mut face_b = seg(ib, ia); // b -> ... -> a along the old boundary
        face_b.extend(pe_ab.iter().copied());
        faces.push(Some(face_a));
        faces.push(Some(face_b));

        for w in path.windows(2) {
            let id = edge_id[&key(w[0], w[1])];
            debug_assert!(!embedded_edge[id]);
            embedded_edge[id] = true;
            remaining -= 1;
        }
        for &v in &path {
            in_h[v] = true;
        }
    }

    // read rotations off the face system: the successor of directed edge
    // (u, v) inside its face is (v, w), meaning w follows u around v
    let mut succ: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    for face in faces.iter().flatten() {
        for i in 0..face.len() {
            succ.insert(face[i], face[(i + 1) % face.len()]);
        }
    }
    let mut rotations = Vec::with_capacity(n);
    for v in 0..n {
        let start = adj[v][0];
        let mut rot = Vec::with_capacity(adj[v].len());
        let mut cur = start;
        loop {
            rot.push(cur);
            let (vv, w) = succ[&(cur, v)];
            debug_assert_eq!(vv, v);
            cur = w;
            if cur == start {
                break;
            }
        }
        assert_eq!(rot.len(), adj[v].len(), "rotation orbit must cover all neighbors");
        rotations.push(rot);
    }
    Some(Embedding { rotations })
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Any cycle, found from the first DFS back edge.
fn some_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut on_stack = vec![false; n];
    let mut visited = vec![false; n];
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    visited[0] = true;
    on_stack[0] = true;
    while let Some(&mut (u, ref mut i)) = stack.last_mut() {
        if *i >= adj[u].len() {
            on_stack[u] = false;
            stack.pop();
            continue;
        }
        let w = adj[u][*i];
        *i += 1;
        if !visited[w] {
            visited[w] = true;
            on_stack[w] = true;
            parent[w] = u;
            stack.push((w, 0));
        } else if on_stack[w] && w != parent[u] {
            let mut cycle = vec![u];
            let mut x = u;
            while x != w {
                x = parent[x];
                cycle.push(x);
            }
            return cycle;
        }
    }
    panic!("acyclic input is not 2-connected");
}

fn find_fragments(
    adj: &[Vec<usize>],
    edges: &[(usize, usize)],
    embedded_edge: &[bool],
    in_h: &[bool],
) -> Vec<Fragment> {
    let n = adj.len();
    let mut fragments = Vec::new();
    for (id, &(u, v)) in edges.iter().enumerate() {
        if !embedded_edge[id] && in_h[u] && in_h[v] {
            fragments.push(Fragment::Chord(u, v));
        }
    }
    let mut comp = vec![usize::MAX; n];
    for s in 0..n {
        if in_h[s] || comp[s] != usize::MAX {
            continue;
        }
        let cid = fragments.len();
        let mut members = vec![s];
        comp[s] = cid;
        let mut head = 0;
        while head < members.len() {
            let u = members[head];
            head += 1;
            for &w in &adj[u] {
                if !in_h[w] && comp[w] == usize::MAX {
                    comp[w] = cid;
                    members.push(w);
                }
            }
        }
        let mut attachments: Vec<usize> = members
            .iter()
            .flat_map(|&u| adj[u].iter().copied().filter(|&w| in_h[w]))
            .collect();
        attachments.sort_unstable();
        attachments.dedup();
        assert!(attachments.len() >= 2, "cut vertex found; input not 2-connected");
        fragments.push(Fragment::Component { members, attachments });
    }
    fragments
}

/// One path through the fragment between two distinct attachment vertices.
fn fragment_path(frag: &Fragment, adj: &[Vec<usize>], in_h: &[bool]) -> Vec<usize> {
    match frag {
        Fragment::Chord(u, v) => vec![*u, *v],
        Fragment::Component { members, attachments } => {
            let a = attachments[0];
            let in_comp: std::collections::HashSet<usize> = members.iter().copied().collect();
            let mut pred: HashMap<usize, usize> = HashMap::new();
            let mut queue: Vec<usize> = Vec::new();
            for &x in adj[a].iter().filter(|x| in_comp.contains(x)) {
                if !pred.contains_key(&x) {
                    pred.insert(x, usize::MAX);
                    queue.push(x);
                }
            }
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                if let Some(&b) = adj[x].iter().find(|&&w| in_h[w] && w != a) {
                    let mut path = vec![b, x];
                    let mut cur = x;
                    while pred[&cur] != usize::MAX {
                        cur = pred[&cur];
                        path.push(cur);
                    }
                    path.push(a);
                    path.reverse();
                    return path;
                }
                for &w in &adj[x] {
                    if in_comp.contains(&w) && !pred.contains_key(&w) {
                        pred.insert(w, x);
                        queue.push(w);
                    }
                }
            }
            unreachable!("component fragment with a single reachable attachment");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face_count(emb: &Embedding) -> usize {
        // orbits of (u, v) -> (v, next-after-u-at-v) partition directed edges
        let mut next_at: Vec<HashMap<usize, usize>> = Vec::new();
        for rot in &emb.rotations {
            let mut m = HashMap::new();
            for i in 0..rot.len() {
                m.insert(rot[i], rot[(i + 1) % rot.len()]);
            }
            next_at.push(m);
        }
        let mut seen: std::collections::HashSet<(usize, usize)> = Default::default();
        let mut count = 0;
        for u in 0..emb.rotations.len() {
            for &v in &emb.rotations[u] {
                if seen.contains(&(u, v)) {
                    continue;
                }
                count += 1;
                let mut e = (u, v);
                while seen.insert(e) {
                    e = (e.1, next_at[e.1][&e.0]);
                }
            }
        }
        count
    }

    fn check_planar(n: usize, edges: &[(usize, usize)], expect_faces: usize) {
        let emb = planar_embedding(n, edges).expect("planar");
        for (v, rot) in emb.rotations.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            let mut expect: Vec<usize> = edges
                .iter()
                .flat_map(|&(a, b)| {
                    if a == v {
                        Some(b)
                    } else if b == v {
                        Some(a)
                    } else {
                        None
                    }
                })
                .collect();
            expect.sort_unstable();
            assert_eq!(sorted, expect, "rotation at {v} covers its neighbors");
        }
        assert_eq!(face_count(&emb), expect_faces, "Euler face count");
    }

    #[test]
    fn triangle() {
        check_planar(3, &[(0, 1), (1, 2), (2, 0)], 2);
    }

    #[test]
    fn k4() {
        check_planar(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], 4);
    }

    #[test]
    fn cube() {
        let edges = [
            (0, 1), (1, 2), (2, 3), (3, 0),
            (4, 5), (5, 6), (6, 7), (7, 4),
            (0, 4), (1, 5), (2, 6), (3, 7),
        ];
        check_planar(8, &edges, 6);
    }

    #[test]
    fn wheel() {
        let edges = [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (5, 0), (5, 1), (5, 2), (5, 3), (5, 4),
        ];
        check_planar(6, &edges, 6);
    }

    #[test]
    fn k5_is_nonplanar() {
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                edges.push((i, j));
            }
        }
        assert!(planar_embedding(5, &edges).is_none());
    }

    #[test]
    fn k33_is_nonplanar() {
        let mut edges = Vec::new();
        for i in 0..3 {
            for j in 3..6 {
                edges.push((i, j));
            }
        }
        assert!(planar_embedding(6, &edges).is_none());
    }

    #[test]
    fn petersen_is_nonplanar() {
        let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
        edges.extend((0..5).map(|i| (i, 5 + i)));
        assert!(planar_embedding(10, &edges).is_none());
    }

    #[test]
    fn k5_minus_an_edge_is_planar() {
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                if (i, j) != (0, 1) {
                    edges.push((i, j));
                }
            }
        }
        check_planar(5, &edges, 6);
    }
}
