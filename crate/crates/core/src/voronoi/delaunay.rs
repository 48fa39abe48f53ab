//! Randomized incremental Delaunay triangulation with exact predicates.
//!
//! The unbounded face is represented by ghost triangles `(a, b, G)`, one per
//! hull edge, so interior and exterior insertions follow the same
//! cavity-evacuation path. A ghost's "circumdisk" is the limit of disks
//! through its real edge with center pushed to infinity: the open outer
//! half-plane plus the open edge itself.
//!
//! Cocircular ties are broken by insertion order; the triangulation always
//! satisfies the weak Delaunay property (no point strictly inside any
//! circumcircle), which is what the circle-merging pass upstream relies on.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{
    find_non_collinear_witness, hom_strictly_between, incircle_from_minors, lift_minors,
    orient_hom, HomPoint, PointSet,
};

const GHOST: usize = usize::MAX;

/// Fixed seed: construction is randomized in the algorithmic sense but
/// deterministic for a given input set.
const SHUFFLE_SEED: u64 = 0x56_4f_52_49;

#[derive(Clone)]
struct Tri {
    /// Vertex indices, counterclockwise; ghosts carry `GHOST` in slot 2.
    v: [usize; 3],
    /// Cached 3x3 minors of the lifted vertex rows (solid triangles only).
    minors: Option<[BigInt; 4]>,
}

impl Tri {
    fn is_ghost(&self) -> bool {
        self.v[2] == GHOST
    }

    fn edges(&self) -> [(usize, usize); 3] {
        [
            (self.v[0], self.v[1]),
            (self.v[1], self.v[2]),
            (self.v[2], self.v[0]),
        ]
    }
}

struct Builder {
    homs: Vec<HomPoint>,
    rows: Vec<[BigInt; 4]>,
    slots: Vec<Option<Tri>>,
    free: Vec<usize>,
    /// Directed edge -> owning triangle. Every directed edge has exactly one
    /// owner; the reverse edge belongs to the neighbor.
    edge: HashMap<(usize, usize), usize>,
    rng: ChaCha8Rng,
    last_solid: usize,
    alive: usize,
}

impl Builder {
    fn new(homs: Vec<HomPoint>, rng: ChaCha8Rng) -> Self {
        let rows = homs.iter().map(HomPoint::lift_row).collect();
        Builder {
            homs,
            rows,
            slots: Vec::new(),
            free: Vec::new(),
            edge: HashMap::new(),
            rng,
            last_solid: 0,
            alive: 0,
        }
    }

    fn tri(&self, id: usize) -> &Tri {
        self.slots[id].as_ref().expect("live triangle")
    }

    fn add(&mut self, v: [usize; 3]) -> usize {
        let tri = Tri { v, minors: None };
        let id = match self.free.pop() {
            Some(id) => {
                self.slots[id] = Some(tri);
                id
            }
            None => {
                self.slots.push(Some(tri));
                self.slots.len() - 1
            }
        };
        for e in self.tri(id).edges() {
            let prev = self.edge.insert(e, id);
            debug_assert!(prev.is_none(), "directed edge owned twice");
        }
        self.alive += 1;
        id
    }

    fn remove(&mut self, id: usize) {
        let tri = self.slots[id].take().expect("live triangle");
        for e in tri.edges() {
            self.edge.remove(&e);
        }
        self.free.push(id);
        self.alive -= 1;
    }

    /// Whether point `p` lies strictly inside the (possibly ghost)
    /// circumdisk of triangle `id`.
    fn conflicts(&mut self, id: usize, p: usize, p_row: &[BigInt; 4]) -> bool {
        let v = self.tri(id).v;
        if v[2] == GHOST {
            let (a, b) = (v[0], v[1]);
            let o = orient_hom(&self.homs[a], &self.homs[b], &self.homs[p]);
            o > 0 || (o == 0 && hom_strictly_between(&self.homs[a], &self.homs[b], &self.homs[p]))
        } else {
            if self.tri(id).minors.is_none() {
                let m = lift_minors(&self.rows[v[0]], &self.rows[v[1]], &self.rows[v[2]]);
                self.slots[id].as_mut().unwrap().minors = Some(m);
            }
            incircle_from_minors(self.tri(id).minors.as_ref().unwrap(), p_row) > 0
        }
    }

    /// Stochastic visibility walk from the last created solid triangle to a
    /// triangle in conflict with `p`.
    fn walk(&mut self, p: usize, p_row: &[BigInt; 4]) -> usize {
        let mut cur = self.last_solid;
        let cap = 4 * self.alive + 16;
        for _ in 0..cap {
            let v = self.tri(cur).v;
            debug_assert_ne!(v[2], GHOST);
            let spin = self.rng.gen_range(0..3usize);
            let mut next = None;
            for k in 0..3 {
                let i = (spin + k) % 3;
                let (u, w) = (v[i], v[(i + 1) % 3]);
                if orient_hom(&self.homs[u], &self.homs[w], &self.homs[p]) < 0 {
                    let nb = self.edge[&(w, u)];
                    if self.tri(nb).is_ghost() {
                        // p is strictly outside this hull edge.
                        return nb;
                    }
                    next = Some(nb);
                    break;
                }
            }
            match next {
                Some(nb) => cur = nb,
                // No strictly-violated edge: p is in this closed triangle,
                // hence strictly inside its circumdisk.
                None => return cur,
            }
        }
        // The visibility walk cannot cycle on a Delaunay triangulation, but
        // keep a full scan as a deterministic safety net.
        for id in 0..self.slots.len() {
            if self.slots[id].is_some() && self.conflicts(id, p, p_row) {
                return id;
            }
        }
        unreachable!("every non-duplicate point conflicts with some triangle")
    }

    fn insert(&mut self, p: usize) {
        let p_row = self.rows[p].clone();
        let seed = self.walk(p, &p_row);
        debug_assert!(self.conflicts(seed, p, &p_row));

        // Cavity: all triangles whose circumdisk strictly contains p. It is
        // connected, so BFS over neighbors suffices.
        let mut seen: HashSet<usize> = HashSet::new();
        let mut stack = vec![seed];
        let mut cavity: Vec<usize> = Vec::new();
        seen.insert(seed);
        while let Some(t) = stack.pop() {
            cavity.push(t);
            for (u, w) in self.tri(t).edges() {
                let nb = self.edge[&(w, u)];
                if !seen.contains(&nb) && self.conflicts(nb, p, &p_row) {
                    seen.insert(nb);
                    stack.push(nb);
                }
            }
        }

        // Boundary edges keep the cavity (and hence p) strictly on their
        // left, so each yields a properly oriented new triangle with p.
        let mut boundary: Vec<(usize, usize)> = Vec::new();
        for &t in &cavity {
            for (u, w) in self.tri(t).edges() {
                let nb = self.edge[&(w, u)];
                if !seen.contains(&nb) {
                    boundary.push((u, w));
                }
            }
        }
        for &t in &cavity {
            self.remove(t);
        }

        let mut new_solid = None;
        for (u, w) in boundary {
            if u == GHOST {
                self.add([w, p, GHOST]);
            } else if w == GHOST {
                self.add([p, u, GHOST]);
            } else {
                debug_assert!(orient_hom(&self.homs[u], &self.homs[w], &self.homs[p]) > 0);
                new_solid = Some(self.add([u, w, p]));
            }
        }
        self.last_solid = new_solid.expect("insertion creates a solid triangle");
    }

    fn solid_triangles(&self) -> Vec<[usize; 3]> {
        let mut out: Vec<[usize; 3]> = self
            .slots
            .iter()
            .flatten()
            .filter(|t| !t.is_ghost())
            .map(|t| {
                let mut v = t.v;
                v.sort_unstable();
                v
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// Delaunay triangles of a point set as sorted index triples into the
/// canonical point order. Empty for collinear sets and sets of fewer than
/// three points.
pub(crate) fn delaunay_triangles(set: &PointSet) -> Vec<[usize; 3]> {
    let pts = set.points();
    let n = pts.len();
    if find_non_collinear_witness(pts).is_none() {
        return Vec::new();
    }

    let mut order: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SHUFFLE_SEED);
    order.shuffle(&mut rng);

    let homs: Vec<HomPoint> = pts.iter().map(HomPoint::from).collect();
    // Rotate a non-collinear triple to the front of the insertion order:
    // order[0] and order[1] are distinct, so scan for a third point off
    // their line.
    let k = (2..n)
        .find(|&i| orient_hom(&homs[order[0]], &homs[order[1]], &homs[order[i]]) != 0)
        .expect("set has a non-collinear witness");
    order.swap(2, k);

    let mut b = Builder::new(homs, rng);
    let (i, j, m) = (order[0], order[1], order[2]);
    let (i, j) = if orient_hom(&b.homs[i], &b.homs[j], &b.homs[m]) > 0 {
        (i, j)
    } else {
        (j, i)
    };
    let first = b.add([i, j, m]);
    b.add([j, i, GHOST]);
    b.add([m, j, GHOST]);
    b.add([i, m, GHOST]);
    b.last_solid = first;

    for &p in &order[3..] {
        b.insert(p);
    }
    b.solid_triangles()
}
