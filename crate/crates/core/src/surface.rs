//! Square-tiled surfaces `X(σ, τ)`.
//!
//! Square `i` is glued right-to-left to square `σ(i)` and top-to-bottom to
//! square `τ(i)`. The commutator `Θ = σ⁻¹τ⁻¹στ` walks around the corner of
//! each square; its nontrivial cycles are the cone points, with cone angle
//! equal to the cycle length.

use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;
use crate::farey::PosMatrix;
use crate::perm::{self, Permutation};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Surface {
    sigma: Permutation,
    tau: Permutation,
}

impl Surface {
    pub fn new(sigma: Permutation, tau: Permutation) -> Result<Self, Error> {
        if sigma.degree() != tau.degree() {
            return Err(Error::DegreeMismatch(sigma.degree(), tau.degree()));
        }
        Ok(Surface { sigma, tau })
    }

    /// The one-square torus `X(id, id)`.
    pub fn unit_torus() -> Self {
        Surface {
            sigma: Permutation::identity(1),
            tau: Permutation::identity(1),
        }
    }

    /// The eierlegende Wollmilchsau
    /// `X((1,2,3,4)(5,6,7,8), (1,8,3,6)(2,7,4,5))`, the 8-square surface in
    /// H(1,1,1,1) whose Veech group is all of SL₂(ℤ).
    pub fn wollmilchsau() -> Self {
        "(1,2,3,4)(5,6,7,8);(1,8,3,6)(2,7,4,5)"
            .parse()
            .expect("valid surface")
    }

    pub fn n(&self) -> usize {
        self.sigma.degree()
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    /// True iff `<σ, τ>` acts transitively on the squares.
    pub fn is_connected(&self) -> bool {
        perm::is_transitive(&[&self.sigma, &self.tau])
    }

    /// Connected components as sorted one-based square sets.
    pub fn components(&self) -> Vec<Vec<usize>> {
        perm::orbits(&[&self.sigma, &self.tau])
            .into_iter()
            .map(|o| o.into_iter().map(|i| i + 1).collect())
            .collect()
    }

    /// `Θ = σ⁻¹·τ⁻¹·σ·τ` in left-to-right order.
    pub fn theta(&self) -> Permutation {
        self.sigma
            .inverse()
            .compose(&self.tau.inverse())
            .compose(&self.sigma)
            .compose(&self.tau)
    }

    pub fn cone_data(&self) -> ConeData {
        let theta = self.theta();
        let cone_points: Vec<ConePoint> = theta
            .cycles()
            .into_iter()
            .map(|cycle| {
                let angle = cycle.len() as u64;
                ConePoint { cycle, cone_angle: angle }
            })
            .collect();
        ConeData { theta, cone_points }
    }

    /// The stratum: the list of `cone_angle − 1` over all cone points,
    /// sorted descending. Empty for a union of tori.
    pub fn stratum(&self) -> Vec<u64> {
        let mut a: Vec<u64> = self
            .cone_data()
            .cone_points
            .iter()
            .map(|c| c.cone_angle - 1)
            .collect();
        a.sort_unstable_by(|x, y| y.cmp(x));
        a
    }

    /// Genus of each connected component, in the order of [`Self::components`].
    /// A component with no cone points is a torus (genus 1).
    pub fn genus_by_component(&self) -> Vec<u64> {
        let comps = self.components();
        let cone = self.cone_data();
        comps
            .iter()
            .map(|comp| {
                let excess: u64 = cone
                    .cone_points
                    .iter()
                    .filter(|cp| comp.binary_search(&cp.cycle[0]).is_ok())
                    .map(|cp| cp.cone_angle - 1)
                    .sum();
                debug_assert!(excess % 2 == 0, "total angle excess is even per component");
                excess / 2 + 1
            })
            .collect()
    }

    /// Genus of a connected surface.
    pub fn genus(&self) -> Result<u64, Error> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.genus_by_component()[0])
    }

    /// The surface rotated 90° clockwise: `X(τ, σ⁻¹)`.
    pub fn rotate90(&self) -> Surface {
        Surface {
            sigma: self.tau.clone(),
            tau: self.sigma.inverse(),
        }
    }

    /// `rotate90` applied `k` times.
    pub fn rotate(&self, k: u32) -> Surface {
        let mut cur = self.clone();
        for _ in 0..(k % 4) {
            cur = cur.rotate90();
        }
        cur
    }

    /// Relabels the squares through `w`.
    pub fn relabel(&self, w: &Permutation) -> Surface {
        Surface {
            sigma: self.sigma.relabel(w),
            tau: self.tau.relabel(w),
        }
    }

    /// Equivalence of origamis: simultaneous conjugacy of `(σ, τ)`.
    pub fn is_equivalent(&self, other: &Surface) -> bool {
        self.n() == other.n()
            && perm::simultaneous_conjugator(&self.sigma, &self.tau, &other.sigma, &other.tau)
                .is_some()
    }

    /// Canonical representative of the equivalence class.
    pub fn canonical_class(&self) -> (Permutation, Permutation) {
        perm::canonical_pair(&self.sigma, &self.tau)
    }

    /// Derivatives of the horizontal and vertical Dehn twists:
    /// `([[1,h],[0,1]], [[1,0],[v,1]])` with `h = ord(σ)`, `v = ord(τ)`.
    pub fn dehn_twist_matrices(&self) -> (PosMatrix, PosMatrix) {
        let h = self.sigma.order();
        let v = self.tau.order();
        (
            PosMatrix::new(1, 0, h, 1).expect("twist matrix"),
            PosMatrix::new(1, v, 0, 1).expect("twist matrix"),
        )
    }

    /// JSON form `{"n":3,"sigma":[[1,2]],"tau":[[1,3]]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n(),
            "sigma": self.sigma.cycles(),
            "tau": self.tau.cycles(),
        })
    }
}

/// The commutator together with the cone points it induces.
#[derive(Clone, Debug)]
pub struct ConeData {
    pub theta: Permutation,
    pub cone_points: Vec<ConePoint>,
}

/// One cone point: the Θ-cycle of square corners meeting there and the cone
/// angle (in multiples of 2π), which equals the cycle length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConePoint {
    pub cycle: Vec<usize>,
    pub cone_angle: u64,
}

impl fmt::Display for Surface {
    /// Text form `σ;τ` in cycle notation, e.g. `(1,2);(1,3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.sigma, self.tau)
    }
}

impl fmt::Debug for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X({};{})[n={}]", self.sigma, self.tau, self.n())
    }
}

/// Parses `"(1,2);(1,3)"`. The two permutations are padded to a common
/// degree (the largest label mentioned on either side).
impl FromStr for Surface {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let (ls, rs) = s
            .split_once(';')
            .ok_or_else(|| Error::parse_at(s, 0, "expected \"sigma;tau\""))?;
        let sigma: Permutation = ls.parse()?;
        let tau: Permutation = rs.parse()?;
        let n = sigma.degree().max(tau.degree());
        Surface::new(sigma.pad_to(n), tau.pad_to(n))
    }
}

impl Serialize for Surface {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            sigma: Vec<Vec<usize>>,
            tau: Vec<Vec<usize>>,
        }
        Repr {
            n: self.n(),
            sigma: self.sigma.cycles(),
            tau: self.tau.cycles(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Surface {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            sigma: Vec<Vec<usize>>,
            tau: Vec<Vec<usize>>,
        }
        let r = Repr::deserialize(deserializer)?;
        let sigma = Permutation::from_cycles(&r.sigma, r.n).map_err(D::Error::custom)?;
        let tau = Permutation::from_cycles(&r.tau, r.n).map_err(D::Error::custom)?;
        Surface::new(sigma, tau).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surf(s: &str) -> Surface {
        s.parse().unwrap()
    }

    fn wollmilchsau() -> Surface {
        Surface::wollmilchsau()
    }

    #[test]
    fn construction_and_validation() {
        let x = surf("(1,2);(1,3)");
        assert_eq!(x.n(), 3);
        let bad = Surface::new(
            "(1,2)".parse().unwrap(),
            "(1,2,3)".parse().unwrap(),
        );
        assert!(matches!(bad, Err(Error::DegreeMismatch(2, 3))));
        // the text parser unifies the implicit degrees
        assert_eq!(surf("(1,2);(1,2,3)").n(), 3);
        assert_eq!(surf("id;id").n(), 1);
    }

    #[test]
    fn connectivity() {
        assert!(surf("(1,2);(1,3)").is_connected());
        assert!(Surface::unit_torus().is_connected());
        let x = Surface::new(
            "(1,2)".parse::<Permutation>().unwrap().pad_to(3),
            "(1,2)".parse::<Permutation>().unwrap().pad_to(3),
        )
        .unwrap();
        assert!(!x.is_connected());
        assert_eq!(x.components(), vec![vec![1, 2], vec![3]]);
    }

    #[test]
    fn theta_and_stratum() {
        // X((1,2),(1,3)): Θ = (1,3,2), stratum H(2), genus 2
        let x = surf("(1,2);(1,3)");
        let theta = x.theta();
        assert_eq!(theta, "(1,3,2)".parse().unwrap());
        assert_eq!(x.stratum(), vec![2]);
        assert_eq!(x.genus().unwrap(), 2);

        // unit torus: trivial Θ, no cone points, genus 1
        let t = Surface::unit_torus();
        assert!(t.theta().is_identity());
        assert!(t.stratum().is_empty());
        assert_eq!(t.genus().unwrap(), 1);

        // Wollmilchsau: H(1,1,1,1), genus 3
        let w = wollmilchsau();
        assert_eq!(w.stratum(), vec![1, 1, 1, 1]);
        assert_eq!(w.genus().unwrap(), 3);
    }

    #[test]
    fn stratum_excess_is_even_per_component() {
        // also exercises per-component genus on a disconnected surface
        let x = Surface::new(
            "(1,2)".parse::<Permutation>().unwrap().pad_to(5),
            "(1,2)(3,4,5)".parse().unwrap(),
        )
        .unwrap();
        assert!(!x.is_connected());
        let genera = x.genus_by_component();
        assert_eq!(genera.len(), x.components().len());
        assert!(x.genus().is_err());
    }

    #[test]
    fn rotations() {
        let x = surf("(1,2);(1,3)");
        assert_eq!(x.rotate90(), surf("(1,3);(1,2)"));
        // the displayed sequence X, X90, X180, X270
        assert_eq!(
            x.rotate(2),
            Surface::new(x.sigma().inverse(), x.tau().inverse()).unwrap()
        );
        assert_eq!(
            x.rotate(3),
            Surface::new(x.tau().inverse(), x.sigma().clone()).unwrap()
        );
        assert_eq!(x.rotate(1).rotate(3), x);
        assert_eq!(Surface::unit_torus().rotate90(), Surface::unit_torus());
        // rotation preserves the stratum
        assert_eq!(x.stratum(), x.rotate90().stratum());
        let w = wollmilchsau();
        assert_eq!(w.stratum(), w.rotate90().stratum());
    }

    #[test]
    fn equivalence() {
        let x = surf("(1,2);(1,3)");
        assert!(x.is_equivalent(&surf("(1,3);(1,2)")));
        assert!(x.is_equivalent(&x));
        let id3 = Surface::new(Permutation::identity(3), Permutation::identity(3)).unwrap();
        assert!(!x.is_equivalent(&id3));
        assert!(!x.is_equivalent(&Surface::unit_torus()));
    }

    #[test]
    fn equivalence_is_an_equivalence_relation() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut random_perm = |n: usize| {
            let mut v: Vec<usize> = (1..=n).collect();
            v.shuffle(&mut rng);
            Permutation::from_images(v).unwrap()
        };
        let surfaces: Vec<Surface> = (0..12)
            .map(|_| Surface::new(random_perm(4), random_perm(4)).unwrap())
            .collect();
        for a in &surfaces {
            assert!(a.is_equivalent(a));
            for b in &surfaces {
                assert_eq!(a.is_equivalent(b), b.is_equivalent(a));
                for c in &surfaces {
                    if a.is_equivalent(b) && b.is_equivalent(c) {
                        assert!(a.is_equivalent(c));
                    }
                }
            }
        }
    }

    #[test]
    fn twist_matrices() {
        let x = surf("(1,2);(1,3)");
        let (h, v) = x.dehn_twist_matrices();
        assert_eq!(h.to_string(), "1,2;0,1");
        assert_eq!(v.to_string(), "1,0;2,1");
        let t = Surface::unit_torus();
        let (h, v) = t.dehn_twist_matrices();
        assert_eq!(h.to_string(), "1,1;0,1");
        assert_eq!(v.to_string(), "1,0;1,1");
        let w = wollmilchsau();
        let (h, v) = w.dehn_twist_matrices();
        assert_eq!(h.to_string(), "1,4;0,1");
        assert_eq!(v.to_string(), "1,0;4,1");
    }

    #[test]
    fn text_and_json_roundtrip() {
        let x = surf("(1,2);(1,3)");
        assert_eq!(x.to_string().parse::<Surface>().unwrap(), x);
        let j = serde_json::to_string(&x).unwrap();
        assert_eq!(
            serde_json::from_str::<serde_json::Value>(&j).unwrap(),
            serde_json::json!({"n": 3, "sigma": [[1,2]], "tau": [[1,3]]})
        );
        let back: Surface = serde_json::from_str(&j).unwrap();
        assert_eq!(back, x);
        // JSON keeps trailing fixed squares that the text form cannot express
        let padded = Surface::new(
            "(1,2)".parse::<Permutation>().unwrap().pad_to(4),
            "(1,3)".parse::<Permutation>().unwrap().pad_to(4),
        )
        .unwrap();
        let j = serde_json::to_string(&padded).unwrap();
        assert_eq!(serde_json::from_str::<Surface>(&j).unwrap().n(), 4);
    }
}
