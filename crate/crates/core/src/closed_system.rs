//! Ring diagrams and the closed system of a surface.
//!
//! The ring diagram `B(v, u)` has center `v` and vertex cycle
//! `u, v·u, v²·u, …` of length `ord(v)`; `B(v, u)` and `B(v, vᵐ·u)` are the
//! same diagram, so diagrams are stored with the lexicographically least
//! vertex at the head. The closed system `Ω_X` is the least set of
//! diagrams containing the seed `B(σ, σ⁻¹τσ)` — the left codes of the
//! slopes `0` and `∞` — and closed under re-seeding from adjacent
//! vertices; it collects the left codes of every Farey pair.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use crate::perm::Permutation;
use crate::surface::Surface;

/// A ring diagram in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RingDiagram {
    center: Permutation,
    vertices: Vec<Permutation>,
}

impl RingDiagram {
    /// Builds `B(v, u)` and canonicalizes the vertex cycle. Within one
    /// cycle all vertices `vᵐ·u` are distinct, so the least head is unique.
    pub fn new(v: &Permutation, u: &Permutation) -> RingDiagram {
        assert_eq!(v.degree(), u.degree(), "degree mismatch in ring diagram");
        let ord = v.order() as usize;
        let mut vertices = Vec::with_capacity(ord);
        let mut cur = u.clone();
        for _ in 0..ord {
            vertices.push(cur.clone());
            cur = v.compose(&cur);
        }
        debug_assert_eq!(cur, *u);
        let head = (0..ord)
            .min_by(|&a, &b| vertices[a].cmp(&vertices[b]))
            .expect("nonempty vertex cycle");
        vertices.rotate_left(head);
        RingDiagram {
            center: v.clone(),
            vertices,
        }
    }

    pub fn center(&self) -> &Permutation {
        &self.center
    }

    pub fn vertices(&self) -> &[Permutation] {
        &self.vertices
    }

    pub fn relabel(&self, w: &Permutation) -> RingDiagram {
        RingDiagram::new(&self.center.relabel(w), &self.vertices[0].relabel(w))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "center": self.center.to_string(),
            "vertices": self.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// The closed system of a surface: a finite set of canonical ring diagrams.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosedSystem {
    diagrams: BTreeSet<RingDiagram>,
}

impl ClosedSystem {
    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }

    pub fn contains(&self, d: &RingDiagram) -> bool {
        self.diagrams.contains(d)
    }

    pub fn iter(&self) -> impl Iterator<Item = &RingDiagram> {
        self.diagrams.iter()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "diagrams": self.diagrams.iter().map(|d| d.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// The closed system `Ω_X`: worklist closure of the seed `B(σ, σ⁻¹τσ)`
/// under `B(α, β) ↦ B(w_{m+1}, w_m)` over adjacent vertices (cyclically).
/// Terminates because diagrams live in the finite set `S_n × S_n`.
pub fn closed_system(x: &Surface) -> ClosedSystem {
    ClosedSystem {
        diagrams: levels(x).into_iter().flatten().collect(),
    }
}

/// The closure stratified by BFS depth from the seed: level 0 is the seed
/// diagram, level `k+1` holds the diagrams first reached by re-seeding
/// from level `k`. Trace output only; the union is [`closed_system`].
pub fn levels(x: &Surface) -> Vec<Vec<RingDiagram>> {
    let seed = RingDiagram::new(
        x.sigma(),
        &x.sigma().inverse().compose(x.tau()).compose(x.sigma()),
    );
    let mut seen = BTreeSet::new();
    seen.insert(seed.clone());
    let mut levels = vec![vec![seed.clone()]];
    let mut frontier: VecDeque<RingDiagram> = VecDeque::from([seed]);
    loop {
        let mut next = Vec::new();
        for diagram in frontier.drain(..) {
            let vs = diagram.vertices();
            let len = vs.len();
            for m in 0..len {
                let child = RingDiagram::new(&vs[(m + 1) % len], &vs[m]);
                if seen.insert(child.clone()) {
                    next.push(child);
                }
            }
        }
        if next.is_empty() {
            return levels;
        }
        frontier.extend(next.iter().cloned());
        levels.push(next);
    }
}

/// The relabeled system: every center and vertex pushed through `w`,
/// canonical forms recomputed.
pub fn conjugate_system(s: &ClosedSystem, w: &Permutation) -> ClosedSystem {
    ClosedSystem {
        diagrams: s.diagrams.iter().map(|d| d.relabel(w)).collect(),
    }
}

pub fn systems_equal(a: &ClosedSystem, b: &ClosedSystem) -> bool {
    a == b
}
