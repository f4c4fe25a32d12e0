//! Geometric brute-force oracle for the codes.
//!
//! Everything here traces actual trajectories across the square gluings
//! with exact integer arithmetic — no cutting-sequence algebra — so it can
//! stand as independent ground truth for `code`, `code_left` and
//! `code_right`.
//!
//! For a direction `(q, p)` the lines through lattice points cut each unit
//! square into bands; the quantity `c = p·x − q·y` is constant along a
//! trajectory within a square and changes by an integer across gluings, so
//! a trajectory launched at `c = −1/2` (resp. `+1/2`) hugs the left (resp.
//! right) side of the saddle connections everywhere. The saddle connection
//! out of square `j` starts at its south-west corner on the line `c = 0`,
//! so each passage of the companion trajectory through a band `c ∈ (−1, 0)`
//! (resp. `(0, 1)`) of square `j` marks the next left (resp. right)
//! boundary of the cylinder being followed. First returns of that passage
//! map give exactly the cycles of the left and right codes.

use crate::farey::Slope;
use crate::perm::Permutation;
use crate::surface::Surface;

/// Returns `(code, left code, right code)` of the direction `r`, computed
/// by tracing segments (endpoint squares) and companion trajectories
/// (boundary successor maps) across the gluings.
pub fn trace_oracle(x: &Surface, r: Slope) -> (Permutation, Permutation, Permutation) {
    if r.is_zero() {
        return trace_horizontal(x);
    }
    if r.is_infinity() {
        return trace_vertical(x);
    }
    let (q, p) = r.direction();
    let tracer = Tracer {
        x,
        p: p as i64,
        q: q as i64,
        scale: 2 * (p as i64) * (q as i64),
    };
    let n = x.n();
    let mut code = Vec::with_capacity(n);
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    for i in 0..n {
        code.push(tracer.segment_endpoint(i) + 1);
        left.push(tracer.next_boundary(i, Side::Left) + 1);
        right.push(tracer.next_boundary(i, Side::Right) + 1);
    }
    (
        Permutation::from_images(code).expect("tracer yields a bijection"),
        Permutation::from_images(left).expect("tracer yields a bijection"),
        Permutation::from_images(right).expect("tracer yields a bijection"),
    )
}

/// Horizontal direction `(1, 0)`: saddle connections are the bottom edges.
fn trace_horizontal(x: &Surface) -> (Permutation, Permutation, Permutation) {
    let n = x.n();
    let mut code = Vec::with_capacity(n);
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    for i in 1..=n {
        // Walking east along the bottom edge of square i ends at its
        // south-east corner: the south-west corner of the next square east,
        // which is the north-east corner of the square below that one.
        let east = x.sigma().apply(i);
        code.push(x.tau().inverse().apply(x.sigma().inverse().apply(east)));
        // The row of square i lies on the left; its next bottom edge is the
        // next square east.
        left.push(east);
        // The row below lies on the right; drop down, step east, rise back.
        let below = x.tau().inverse().apply(i);
        right.push(x.tau().apply(x.sigma().apply(below)));
    }
    (
        Permutation::from_images(code).expect("bijection"),
        Permutation::from_images(left).expect("bijection"),
        Permutation::from_images(right).expect("bijection"),
    )
}

/// Vertical direction `(0, 1)`: saddle connections are the left edges.
fn trace_vertical(x: &Surface) -> (Permutation, Permutation, Permutation) {
    let n = x.n();
    let mut code = Vec::with_capacity(n);
    let mut left = Vec::with_capacity(n);
    let mut right = Vec::with_capacity(n);
    for i in 1..=n {
        // Walking north along the left edge of square i ends at its
        // north-west corner, the north-east corner of its western neighbor.
        let west = x.sigma().inverse().apply(i);
        code.push(west);
        // The column on the left is the western neighbor's; climb it and
        // step back east.
        left.push(x.sigma().apply(x.tau().apply(west)));
        // The own column lies on the right; its next left edge is one up.
        right.push(x.tau().apply(i));
    }
    (
        Permutation::from_images(code).expect("bijection"),
        Permutation::from_images(left).expect("bijection"),
        Permutation::from_images(right).expect("bijection"),
    )
}

enum Side {
    Left,
    Right,
}

/// Exact tracer for a fixed non-degenerate direction `(q, p)`. Coordinates
/// of points are stored as integers scaled by `2pq`, which keeps every edge
/// intersection exact.
struct Tracer<'a> {
    x: &'a Surface,
    p: i64,
    q: i64,
    scale: i64,
}

impl Tracer<'_> {
    /// Endpoint square of the saddle connection out of the south-west
    /// corner of square `i` (zero-based): cross edges in the order the
    /// segment meets them. A vertical line `x = a` is met at parameter
    /// `a/q`, a horizontal line `y = b` at `b/p`; the comparison
    /// `a·p < b·q` is exact and never ties away from the endpoint.
    fn segment_endpoint(&self, i: usize) -> usize {
        let (p, q) = (self.p, self.q);
        let mut cur = i;
        let (mut a, mut b) = (1, 1);
        while a < q || b < p {
            let cross_vertical = if a < q && b < p { a * p < b * q } else { a < q };
            if cross_vertical {
                cur = self.x.sigma().apply0(cur);
                a += 1;
            } else {
                cur = self.x.tau().apply0(cur);
                b += 1;
            }
        }
        cur
    }

    /// One flow step from an entry point on the left or bottom edge of
    /// square `s`; coordinates scaled by `2pq`. Exits through exactly one
    /// of the right/top edges (the corner is unreachable off the saddle
    /// lines) into the glued neighbor.
    fn step(&self, s: usize, xx: i64, yy: i64) -> (usize, i64, i64) {
        let d = self.scale;
        // time to the right edge ~ (d-xx)/q, to the top edge ~ (d-yy)/p
        if (d - xx) * self.p < (d - yy) * self.q {
            let rise = self.p * (d - xx);
            debug_assert_eq!(rise % self.q, 0);
            (self.x.sigma().apply0(s), 0, yy + rise / self.q)
        } else {
            let run = self.q * (d - yy);
            debug_assert_eq!(run % self.p, 0);
            (self.x.tau().apply0(s), xx + run / self.p, 0)
        }
    }

    /// Band index `k` of a point with `p·x − q·y = (k − 1/2)`: the band
    /// `c ∈ (k−1, k)` of the current square.
    fn band(&self, xx: i64, yy: i64) -> i64 {
        let num = self.p * xx - self.q * yy + self.p * self.q;
        debug_assert_eq!(num % self.scale, 0);
        num / self.scale
    }

    /// Next left/right boundary after the saddle connection out of square
    /// `i`: launch a companion trajectory at `c = ∓1/2` from the corner of
    /// `i` and follow it to the next band `c ∈ (−1,0)` resp. `(0,1)`.
    fn next_boundary(&self, i: usize, side: Side) -> usize {
        let (target_band, mut pos) = match side {
            // left companion: on the left edge at height 1/(2q)
            Side::Left => (0, (i, 0, self.p)),
            // right companion: on the bottom edge at offset 1/(2p)
            Side::Right => (1, (i, self.q, 0)),
        };
        debug_assert_eq!(self.band(pos.1, pos.2), target_band);
        let limit = self.x.n() as i64 * (self.p + self.q) + 2;
        for _ in 0..limit {
            pos = self.step(pos.0, pos.1, pos.2);
            if self.band(pos.1, pos.2) == target_band {
                return pos.0;
            }
        }
        panic!("companion trajectory failed to close up");
    }
}
