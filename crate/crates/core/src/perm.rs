//! Permutations of `{1..n}` with left-to-right composition.
//!
//! Throughout this crate `p.compose(&q)` means "apply `p` first, then `q`",
//! so a product written `p·q` acts as `i ↦ q(p(i))`. Every formula in the
//! other modules (codes, ring diagrams, Veech tests) is evaluated in this
//! order. Labels are one-based in the public API; the backing array is
//! zero-based.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// An element of the symmetric group on `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// images[i] is the zero-based image of the zero-based point i.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "degree must be positive");
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from its one-based image sequence `[p(1), ..., p(n)]`.
    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        if n == 0 {
            return Err(Error::Parse("degree must be positive".into()));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n {
                return Err(Error::Parse(format!("image {v} out of range 1..={n}")));
            }
            if seen[v - 1] {
                return Err(Error::Parse(format!("image {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|v| v - 1).collect(),
        })
    }

    /// Builds a permutation of `{1..n}` from disjoint cycles in one-based labels.
    ///
    /// Rejects repeated labels and labels outside `1..=n`.
    pub fn from_cycles(cycles: &[Vec<usize>], n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::Parse("degree must be positive".into()));
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a < 1 || a > n {
                    return Err(Error::Parse(format!("label {a} out of range 1..={n}")));
                }
                if used[a - 1] {
                    return Err(Error::Parse(format!("label {a} repeated")));
                }
                used[a - 1] = true;
                let b = cycle[(k + 1) % cycle.len()];
                if b < 1 || b > n {
                    return Err(Error::Parse(format!("label {b} out of range 1..={n}")));
                }
                images[a - 1] = b - 1;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the one-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        assert!(
            i >= 1 && i <= self.images.len(),
            "point {i} out of range 1..={}",
            self.images.len()
        );
        self.images[i - 1] + 1
    }

    /// Zero-based image lookup, for hot loops.
    #[inline]
    pub(crate) fn apply0(&self, i: usize) -> usize {
        self.images[i]
    }

    /// One-based image sequence `[p(1), ..., p(n)]`.
    pub fn image_seq(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Left-to-right product: `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "degree mismatch in compose"
        );
        Permutation {
            images: self.images.iter().map(|&v| other.images[v]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// `self` raised to an integer power (negative powers go through the inverse).
    pub fn power(&self, k: i64) -> Permutation {
        let n = self.degree();
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(n);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    /// Order of the permutation: lcm of its cycle lengths.
    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles_with_fixed()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }

    /// Nontrivial cycles, one-based, each starting at its least label,
    /// sorted by that label.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_with_fixed()
            .into_iter()
            .filter(|c| c.len() > 1)
            .collect()
    }

    /// All cycles including fixed points, one-based.
    pub fn cycles_with_fixed(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted cycle lengths, a cheap conjugacy invariant.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles_with_fixed().iter().map(|c| c.len()).collect();
        t.sort_unstable();
        t
    }

    /// Relabels the moved points through `w`: the result satisfies
    /// `result(w(i)) = w(p(i))` for all `i`, i.e. the cycle `(a,b,c)`
    /// becomes `(w(a),w(b),w(c))`.
    ///
    /// This is the conjugation used everywhere a relabeling of squares acts
    /// on codes; `relabel(relabel(p, w), w.inverse()) == p` and
    /// `relabel(p, w1.compose(&w2)) == relabel(relabel(p, w1), w2)`.
    pub fn relabel(&self, w: &Permutation) -> Permutation {
        assert_eq!(self.degree(), w.degree(), "degree mismatch in relabel");
        let mut images = vec![0; self.images.len()];
        for i in 0..self.images.len() {
            images[w.images[i]] = w.images[self.images[i]];
        }
        Permutation { images }
    }

    /// Extends to degree `n` by fixed points.
    pub fn pad_to(&self, n: usize) -> Permutation {
        assert!(n >= self.degree());
        let mut images = self.images.clone();
        images.extend(self.degree()..n);
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    /// Disjoint-cycle notation; the identity prints as `id`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, a) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{a}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[n={}]", self.degree())
    }
}

/// Parses cycle notation such as `(1,2,3)(4,5)`, or `id` for the identity.
///
/// The degree is the largest label mentioned (`id` parses at degree 1);
/// repeated labels and the label 0 are rejected.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim();
        if t == "id" || t == "()" {
            return Ok(Permutation::identity(1));
        }
        let bytes = t.as_bytes();
        let mut pos = 0;
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut max_label = 0usize;
        while pos < bytes.len() {
            if bytes[pos].is_ascii_whitespace() {
                pos += 1;
                continue;
            }
            if bytes[pos] != b'(' {
                return Err(Error::parse_at(s, pos, "expected '('"));
            }
            pos += 1;
            let mut cycle = Vec::new();
            loop {
                while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                    pos += 1;
                }
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if pos == start {
                    return Err(Error::parse_at(s, pos, "expected a label"));
                }
                let label: usize = t[start..pos]
                    .parse()
                    .map_err(|_| Error::parse_at(s, start, "label too large"))?;
                if label == 0 {
                    return Err(Error::parse_at(s, start, "labels are one-based"));
                }
                max_label = max_label.max(label);
                cycle.push(label);
                while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                    pos += 1;
                }
                match bytes.get(pos) {
                    Some(b',') => pos += 1,
                    Some(b')') => {
                        pos += 1;
                        break;
                    }
                    _ => return Err(Error::parse_at(s, pos, "expected ',' or ')'")),
                }
            }
            cycles.push(cycle);
        }
        if cycles.is_empty() {
            return Err(Error::parse_at(s, 0, "empty permutation"));
        }
        Permutation::from_cycles(&cycles, max_label)
    }
}

/// Iterates over all of `S_n` (Heap's algorithm). Used by the exhaustive
/// centralizer and symmetry scans; keep `n` small.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    assert!(n >= 1);
    HeapIter {
        items: (0..n).collect(),
        stack: vec![0; n],
        depth: 0,
        first: true,
    }
}

struct HeapIter {
    items: Vec<usize>,
    stack: Vec<usize>,
    depth: usize,
    first: bool,
}

impl Iterator for HeapIter {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.first {
            self.first = false;
            return Some(Permutation {
                images: self.items.clone(),
            });
        }
        let n = self.items.len();
        while self.depth < n {
            if self.stack[self.depth] < self.depth {
                if self.depth % 2 == 0 {
                    self.items.swap(0, self.depth);
                } else {
                    self.items.swap(self.stack[self.depth], self.depth);
                }
                self.stack[self.depth] += 1;
                self.depth = 0;
                return Some(Permutation {
                    images: self.items.clone(),
                });
            } else {
                self.stack[self.depth] = 0;
                self.depth += 1;
            }
        }
        None
    }
}

/// Whether the group generated by the given permutations acts transitively
/// on `{1..n}`. Forward closure suffices: inverses are positive powers.
pub fn is_transitive(gens: &[&Permutation]) -> bool {
    orbits(gens).len() == 1
}

/// Orbits of `{1..n}` (zero-based points) under the group generated by `gens`.
pub(crate) fn orbits(gens: &[&Permutation]) -> Vec<Vec<usize>> {
    let n = gens[0].degree();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for g in gens {
                let j = g.apply0(i);
                if !seen[j] {
                    seen[j] = true;
                    orbit.push(j);
                    stack.push(j);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Searches for `w` with `relabel(a1, w) == b1` and `relabel(a2, w) == b2`.
///
/// When `<a1,a2>` is transitive, `w` is determined by the image of a single
/// point, so every anchor image is tried and propagated through the two
/// generators. Otherwise each orbit is anchored independently with
/// backtracking across orbit assignments.
pub fn simultaneous_conjugator(
    a1: &Permutation,
    a2: &Permutation,
    b1: &Permutation,
    b2: &Permutation,
) -> Option<Permutation> {
    let n = a1.degree();
    assert!(
        a2.degree() == n && b1.degree() == n && b2.degree() == n,
        "degree mismatch in simultaneous_conjugator"
    );
    if a1.cycle_type() != b1.cycle_type() || a2.cycle_type() != b2.cycle_type() {
        return None;
    }

    // w[i] = image of zero-based point i, usize::MAX when unassigned.
    const FREE: usize = usize::MAX;

    // Assigns w[root] = anchor and propagates w(a(i)) = b(w(i)) through both
    // generator edges. Returns the points assigned (for rollback), or None on
    // contradiction.
    fn propagate(
        a1: &Permutation,
        a2: &Permutation,
        b1: &Permutation,
        b2: &Permutation,
        w: &mut [usize],
        used: &mut [bool],
        root: usize,
        anchor: usize,
    ) -> Option<Vec<usize>> {
        let mut assigned = Vec::new();
        let mut stack = Vec::new();
        if used[anchor] {
            return None;
        }
        w[root] = anchor;
        used[anchor] = true;
        assigned.push(root);
        stack.push(root);
        while let Some(i) = stack.pop() {
            for (a, b) in [(a1, b1), (a2, b2)] {
                let j = a.apply0(i);
                let jm = b.apply0(w[i]);
                if w[j] != FREE {
                    if w[j] != jm {
                        for &k in &assigned {
                            used[w[k]] = false;
                            w[k] = FREE;
                        }
                        return None;
                    }
                } else {
                    if used[jm] {
                        for &k in &assigned {
                            used[w[k]] = false;
                            w[k] = FREE;
                        }
                        return None;
                    }
                    w[j] = jm;
                    used[jm] = true;
                    assigned.push(j);
                    stack.push(j);
                }
            }
        }
        Some(assigned)
    }

    fn search(
        a1: &Permutation,
        a2: &Permutation,
        b1: &Permutation,
        b2: &Permutation,
        orbit_roots: &[usize],
        k: usize,
        w: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if k == orbit_roots.len() {
            return true;
        }
        let root = orbit_roots[k];
        let n = w.len();
        for anchor in 0..n {
            if used[anchor] {
                continue;
            }
            if let Some(assigned) = propagate(a1, a2, b1, b2, w, used, root, anchor) {
                if search(a1, a2, b1, b2, orbit_roots, k + 1, w, used) {
                    return true;
                }
                for &i in &assigned {
                    used[w[i]] = false;
                    w[i] = FREE;
                }
            }
        }
        false
    }

    let orbit_roots: Vec<usize> = orbits(&[a1, a2]).into_iter().map(|o| o[0]).collect();
    let mut w = vec![FREE; n];
    let mut used = vec![false; n];
    if search(a1, a2, b1, b2, &orbit_roots, 0, &mut w, &mut used) {
        // Propagation checked every edge w(a(i)) = b(w(i)), so w conjugates.
        Some(Permutation { images: w })
    } else {
        None
    }
}

/// The lexicographically least pair of image sequences over all simultaneous
/// relabelings of `(a1, a2)` — a total canonical form for the
/// simultaneous-conjugacy class.
///
/// Branch-and-bound over label assignments: positions of the target sequence
/// are produced in order, fresh labels are forced to be the smallest unused
/// one (anything larger is lexicographically worse on the spot), and the only
/// branching is over which point receives the next fresh label.
pub fn canonical_pair(a1: &Permutation, a2: &Permutation) -> (Permutation, Permutation) {
    let n = a1.degree();
    assert_eq!(n, a2.degree(), "degree mismatch in canonical_pair");
    const FREE: usize = usize::MAX;

    struct State<'a> {
        a1: &'a Permutation,
        a2: &'a Permutation,
        n: usize,
        w: Vec<usize>,      // point -> label
        u: Vec<usize>,      // label -> point
        next_label: usize,  // labels 0..next_label are assigned
        seq: Vec<usize>,    // sequence values produced so far
        best: Option<Vec<usize>>,
    }

    impl State<'_> {
        fn dfs(&mut self, pos: usize, lt_best: bool) {
            if pos == 2 * self.n {
                if lt_best || self.best.is_none() {
                    self.best = Some(self.seq.clone());
                }
                return;
            }
            let label = pos % self.n;
            if self.u[label] == FREE {
                // label == next_label here; branch over the receiving point.
                debug_assert_eq!(label, self.next_label);
                for p in 0..self.n {
                    if self.w[p] == FREE {
                        self.assign(p);
                        self.dfs(pos, lt_best);
                        self.unassign(p);
                    }
                }
                return;
            }
            let a = if pos < self.n { self.a1 } else { self.a2 };
            let t = a.apply0(self.u[label]);
            let fresh = self.w[t] == FREE;
            if fresh {
                self.assign(t);
            }
            let v = self.w[t];
            let (prune, lt_next) = match (&self.best, lt_best) {
                (Some(best), false) => {
                    if v > best[pos] {
                        (true, false)
                    } else {
                        (false, v < best[pos])
                    }
                }
                _ => (false, lt_best),
            };
            if !prune {
                self.seq.push(v);
                self.dfs(pos + 1, lt_next);
                self.seq.pop();
            }
            if fresh {
                self.unassign(t);
            }
        }

        fn assign(&mut self, p: usize) {
            self.w[p] = self.next_label;
            self.u[self.next_label] = p;
            self.next_label += 1;
        }

        fn unassign(&mut self, p: usize) {
            self.next_label -= 1;
            self.u[self.next_label] = FREE;
            self.w[p] = FREE;
        }
    }

    let mut st = State {
        a1,
        a2,
        n,
        w: vec![FREE; n],
        u: vec![FREE; n],
        next_label: 0,
        seq: Vec::with_capacity(2 * n),
        best: None,
    };
    st.dfs(0, false);
    let best = st.best.expect("canonical search always completes");
    let c1 = Permutation {
        images: best[..n].to_vec(),
    };
    let c2 = Permutation {
        images: best[n..].to_vec(),
    };
    (c1, c2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pn(s: &str, n: usize) -> Permutation {
        p(s).pad_to(n)
    }

    #[test]
    fn compose_is_left_to_right() {
        // (1,2,4)·(2,3) = (1,3,2,4) in S4
        let a = pn("(1,2,4)", 4);
        let b = pn("(2,3)", 4);
        assert_eq!(a.compose(&b), pn("(1,3,2,4)", 4));
        // (1,2)·(1,3) = (1,2,3) in S3
        assert_eq!(pn("(1,2)", 3).compose(&pn("(1,3)", 3)), p("(1,2,3)"));
        // identity is neutral
        let q = p("(1,4)(2,5,3)");
        assert_eq!(Permutation::identity(5).compose(&q), q);
        assert_eq!(q.compose(&Permutation::identity(5)), q);
    }

    #[test]
    #[should_panic(expected = "degree mismatch")]
    fn compose_degree_mismatch_panics() {
        let _ = p("(1,2)").compose(&p("(1,2,3)"));
    }

    #[test]
    fn order_examples() {
        assert_eq!(p("(1,3,2,4)").order(), 4);
        assert_eq!(Permutation::identity(3).order(), 1);
        assert_eq!(p("(1,2)(3,4,5)").order(), 6);
        // direct powering agrees
        let q = p("(1,2)(3,4,5)");
        let mut acc = Permutation::identity(5);
        let mut m = 0;
        loop {
            acc = acc.compose(&q);
            m += 1;
            if acc.is_identity() {
                break;
            }
        }
        assert_eq!(m, 6);
    }

    #[test]
    fn relabel_pushes_cycle_labels() {
        assert_eq!(pn("(1,2)", 3).relabel(&pn("(2,3)", 3)), pn("(1,3)", 3));
        let q = p("(1,3,4)").pad_to(4);
        assert_eq!(q.relabel(&Permutation::identity(4)), q);
        assert_eq!(q.relabel(&p("(1,2,3,4)")), pn("(1,2,4)", 4));
        // round-trip
        let w = p("(1,4,2)(3,5)");
        let r = p("(2,5,3)").pad_to(5);
        assert_eq!(r.relabel(&w).relabel(&w.inverse()), r);
    }

    #[test]
    fn relabel_is_group_action() {
        let r = p("(1,2,3)(4,5)");
        let w1 = p("(2,4)").pad_to(5);
        let w2 = p("(1,5,3)").pad_to(5);
        assert_eq!(
            r.relabel(&w1.compose(&w2)),
            r.relabel(&w1).relabel(&w2)
        );
    }

    #[test]
    fn relabel_is_automorphism() {
        let a = p("(1,2,3)").pad_to(4);
        let b = p("(2,4)").pad_to(4);
        let w = p("(1,3)(2,4)");
        assert_eq!(
            a.compose(&b).relabel(&w),
            a.relabel(&w).compose(&b.relabel(&w))
        );
    }

    #[test]
    fn power_and_inverse() {
        let q = p("(1,2,3,4,5)");
        assert_eq!(q.power(5), Permutation::identity(5));
        assert_eq!(q.power(-1), q.inverse());
        assert_eq!(q.compose(&q.inverse()), Permutation::identity(5));
        assert_eq!(q.power(7), q.power(2));
    }

    #[test]
    fn cycle_roundtrip() {
        let q = p("(1,3)(2,6,4)");
        let back = Permutation::from_cycles(&q.cycles(), q.degree()).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("(1,2,3)(4,5)").to_string(), "(1,2,3)(4,5)");
        assert_eq!(Permutation::identity(4).to_string(), "id");
        assert_eq!("id".parse::<Permutation>().unwrap(), Permutation::identity(1));
        assert!("(1,1)".parse::<Permutation>().is_err());
        assert!("(1,0)".parse::<Permutation>().is_err());
        assert!("(1,2".parse::<Permutation>().is_err());
        assert!(Permutation::from_cycles(&[vec![1, 5]], 3).is_err());
    }

    #[test]
    fn conjugator_examples() {
        // ((1,2),(1,3)) vs ((1,3),(1,2)) in S3 — conjugate by (2,3)
        let a1 = pn("(1,2)", 3);
        let a2 = pn("(1,3)", 3);
        let w = simultaneous_conjugator(&a1, &a2, &a2, &a1).expect("conjugate");
        assert_eq!(a1.relabel(&w), a2);
        assert_eq!(a2.relabel(&w), a1);

        // identical pairs: some witness exists and id works
        let w = simultaneous_conjugator(&a1, &a2, &a1, &a2).expect("self-conjugate");
        assert_eq!(a1.relabel(&w), a1);
        assert_eq!(a2.relabel(&w), a2);

        // ((1,2),(1,2)) vs ((1,2),(3,4)) in S4: not conjugate
        let c = pn("(1,2)", 4);
        let d = pn("(3,4)", 4);
        assert!(simultaneous_conjugator(&c, &c, &c, &d).is_none());
    }

    #[test]
    fn conjugator_prefers_identity_witness() {
        let a1 = pn("(1,2)", 3);
        let a2 = pn("(1,3)", 3);
        let w = simultaneous_conjugator(&a1, &a2, &a1, &a2).unwrap();
        assert!(w.is_identity());
    }

    #[test]
    fn canonical_pair_examples() {
        let id = Permutation::identity(3);
        assert_eq!(canonical_pair(&id, &id), (id.clone(), id.clone()));

        // conjugate inputs give identical outputs
        let a1 = pn("(1,3)", 3);
        let a2 = pn("(1,2)", 3);
        let b1 = pn("(1,2)", 3);
        let b2 = pn("(1,3)", 3);
        assert_eq!(canonical_pair(&a1, &a2), canonical_pair(&b1, &b2));

        // non-conjugate pairs give distinct keys
        let c = pn("(1,2)", 4);
        let d = pn("(3,4)", 4);
        assert_ne!(canonical_pair(&c, &d), canonical_pair(&c, &c));
    }

    #[test]
    fn canonical_pair_is_class_member_and_least() {
        // brute-force oracle over all of S4: the canonical pair is the
        // lexicographically least relabeling and is reached by one.
        let a1 = pn("(1,2)", 4);
        let a2 = pn("(2,3,4)", 4);
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for w in all_permutations(4) {
            let key = (a1.relabel(&w).image_seq(), a2.relabel(&w).image_seq());
            if best.as_ref().map_or(true, |b| key < *b) {
                best = Some(key);
            }
        }
        let (c1, c2) = canonical_pair(&a1, &a2);
        assert_eq!(
            (c1.image_seq(), c2.image_seq()),
            best.unwrap()
        );
    }

    #[test]
    fn conjugator_iff_canonical_equal_exhaustive_s3() {
        let perms: Vec<Permutation> = all_permutations(3).collect();
        for x1 in &perms {
            for x2 in &perms {
                for y1 in &perms {
                    for y2 in &perms {
                        let witness = simultaneous_conjugator(x1, x2, y1, y2);
                        let same = canonical_pair(x1, x2) == canonical_pair(y1, y2);
                        assert_eq!(witness.is_some(), same);
                        if let Some(w) = witness {
                            assert_eq!(x1.relabel(&w), *y1);
                            assert_eq!(x2.relabel(&w), *y2);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn heap_iterator_covers_sn() {
        use std::collections::HashSet;
        let all: HashSet<Vec<usize>> = all_permutations(4).map(|p| p.image_seq()).collect();
        assert_eq!(all.len(), 24);
    }
}
