//! Polyhedral gauges: asymmetric norms of the form `‖x| = maxᵢ ⟨aᵢ, x⟩`.
//!
//! A gauge is valid when the max is nonnegative everywhere (0 lies in the
//! convex hull of the generators) and the generators span the space (so
//! ‖x| = ‖-x| = 0 forces x = 0). Positive homogeneity and subadditivity
//! hold structurally for any max of linear functionals. Both validity
//! axioms are checked exactly at construction and a witness point is
//! attached to every rejection.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, GaugeDefect, Result};
use crate::linalg::{self, dot};
use crate::polyhedra::{lp_solve, HPolyhedron, LpOutcome, Sense};
use crate::scalar::{format_vec, int, rat, Rat};

/// An asymmetric norm on Qⁿ given by its generating functionals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralGauge {
    dim: usize,
    generators: Vec<Vec<Rat>>,
    label: String,
}

impl PolyhedralGauge {
    /// Validate and build a gauge. Fails with a witness if the max of the
    /// generators is negative somewhere, or if some nonzero point has
    /// ‖x| = ‖-x| = 0.
    pub fn new(dim: usize, generators: Vec<Vec<Rat>>, label: impl Into<String>) -> Result<Self> {
        if dim == 0 {
            return Err(GaugeDefect::ZeroDimension.into());
        }
        if generators.is_empty() {
            return Err(GaugeDefect::NoGenerators.into());
        }
        for (i, g) in generators.iter().enumerate() {
            if g.len() != dim {
                return Err(Error::Input(format!(
                    "generator {i} has {} coordinates, expected {dim}",
                    g.len()
                )));
            }
        }

        // Separation: the generators must span Qⁿ.
        if let Some(witness) = linalg::kernel_vector(&generators, dim) {
            return Err(GaugeDefect::Degenerate {
                witness: format_vec(&witness),
            }
            .into());
        }

        // Positivity: min over the box [-1,1]ⁿ of maxᵢ⟨aᵢ, x⟩ must be 0.
        // Variables (x, t) with ⟨aᵢ, x⟩ ≤ t; by homogeneity the box decides.
        let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::new();
        for g in &generators {
            let mut row = g.clone();
            row.push(-Rat::one());
            rows.push((row, Rat::zero()));
        }
        for k in 0..dim {
            let mut up = linalg::zeros(dim + 1);
            up[k] = Rat::one();
            let down = linalg::neg(&up);
            rows.push((up, Rat::one()));
            rows.push((down, Rat::one()));
        }
        let lifted = HPolyhedron::new(dim + 1, rows)?;
        let mut objective = linalg::zeros(dim + 1);
        objective[dim] = Rat::one();
        match lp_solve(&objective, Sense::Min, &lifted)? {
            LpOutcome::Optimal { value, point } if value.is_negative() => {
                return Err(GaugeDefect::NotNonnegative {
                    witness: format_vec(&point[..dim]),
                }
                .into());
            }
            LpOutcome::Optimal { .. } => {}
            other => unreachable!("box LP is feasible and bounded: {other:?}"),
        }

        Ok(PolyhedralGauge {
            dim,
            generators,
            label: label.into(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[Vec<Rat>] {
        &self.generators
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    fn check_dim(&self, x: &[Rat]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        Ok(())
    }

    /// ‖x| = maxᵢ⟨aᵢ, x⟩. Exactly zero is possible for x ≠ 0 (non-T₁
    /// spaces).
    pub fn eval(&self, x: &[Rat]) -> Result<Rat> {
        self.check_dim(x)?;
        let mut best = dot(&self.generators[0], x);
        for g in &self.generators[1..] {
            let v = dot(g, x);
            if v > best {
                best = v;
            }
        }
        Ok(best)
    }

    /// ‖-x|.
    pub fn eval_reverse(&self, x: &[Rat]) -> Result<Rat> {
        self.eval(&linalg::neg(x))
    }

    /// The associated symmetric norm ‖x‖ₛ = max(‖x|, ‖-x|).
    pub fn symmetric_norm(&self, x: &[Rat]) -> Result<Rat> {
        Ok(self.eval(x)?.max(self.eval_reverse(x)?))
    }

    /// The gauge of the associated normed space: generators {aᵢ} ∪ {-aᵢ}.
    pub fn symmetrize(&self) -> PolyhedralGauge {
        let mut generators = self.generators.clone();
        generators.extend(self.generators.iter().map(|g| linalg::neg(g)));
        PolyhedralGauge {
            dim: self.dim,
            generators,
            label: format!("sym({})", self.label),
        }
    }

    /// The gauge of ‖x|′ = ‖x| + ‖x‖ₛ: generators {aᵢ + bⱼ} over this
    /// gauge's aᵢ and the symmetrization's bⱼ. Keeps 0 < c < 1 whenever the
    /// input is asymmetric.
    pub fn sum_with_symmetric(&self) -> PolyhedralGauge {
        let sym = self.symmetrize();
        let mut generators = Vec::with_capacity(self.generators.len() * sym.generators.len());
        for a in &self.generators {
            for b in &sym.generators {
                generators.push(linalg::add(a, b));
            }
        }
        PolyhedralGauge {
            dim: self.dim,
            generators,
            label: format!("{} + sym", self.label),
        }
    }

    /// The closed unit ball {x : ‖x| ≤ 1} as an H-polyhedron, one row per
    /// generator (vacuous rows from zero generators included).
    pub fn unit_ball(&self) -> HPolyhedron {
        let rows = self
            .generators
            .iter()
            .map(|g| (g.clone(), Rat::one()))
            .collect();
        HPolyhedron::new(self.dim, rows).expect("gauge dims are consistent")
    }

    /// True iff the gauge is symmetric as given: for every generator, its
    /// negation is dominated by the family (checked by LP).
    pub fn is_symmetric(&self) -> bool {
        self.generators
            .iter()
            .all(|g| self.dominates(&linalg::neg(g)))
    }

    /// ⟨p, x⟩ ≤ ‖x| for all x, i.e. p ∈ conv(generators).
    fn dominates(&self, p: &[Rat]) -> bool {
        in_convex_hull(p, &self.generators)
    }

    /// Drop duplicate and dominated generators. The result evaluates
    /// identically; canonicalization is optional everywhere else.
    pub fn canonicalized(&self) -> PolyhedralGauge {
        let mut kept: Vec<Vec<Rat>> = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            if kept.contains(g) {
                continue;
            }
            let mut others: Vec<Vec<Rat>> = kept.clone();
            others.extend(self.generators[i + 1..].iter().filter(|h| *h != g).cloned());
            if !others.is_empty() && in_convex_hull(g, &others) {
                continue;
            }
            kept.push(g.clone());
        }
        PolyhedralGauge {
            dim: self.dim,
            generators: kept,
            label: self.label.clone(),
        }
    }
}

/// Exact membership test p ∈ conv{vᵢ} via a feasibility LP in the convex
/// weights.
fn in_convex_hull(p: &[Rat], vs: &[Vec<Rat>]) -> bool {
    let k = vs.len();
    let dim = p.len();
    let mut rows: Vec<(Vec<Rat>, Rat)> = Vec::new();
    for i in 0..k {
        rows.push((linalg::neg(&linalg::unit(k, i)), Rat::zero()));
    }
    let ones = vec![Rat::one(); k];
    rows.push((ones.clone(), Rat::one()));
    rows.push((linalg::neg(&ones), -Rat::one()));
    for c in 0..dim {
        let coeffs: Vec<Rat> = vs.iter().map(|v| v[c].clone()).collect();
        rows.push((coeffs.clone(), p[c].clone()));
        rows.push((linalg::neg(&coeffs), -&p[c]));
    }
    let poly = HPolyhedron::new(k, rows).expect("hull rows are well-formed");
    !matches!(
        lp_solve(&linalg::zeros(k), Sense::Max, &poly).expect("dimensions agree"),
        LpOutcome::Infeasible
    )
}

/// The example spaces used throughout the crate and by the CLI.
pub mod fixtures {
    use super::*;

    /// The upper real line: ‖t| = max(0, t) on Q¹. Not T₁ (type III).
    pub fn upper_real() -> PolyhedralGauge {
        PolyhedralGauge::new(1, vec![vec![int(0)], vec![int(1)]], "upper_real")
            .expect("fixture is valid")
    }

    /// ‖(x₁,x₂)| = max(|x₁|, x₂⁺) on Q². c = 0, not T₁, yet every
    /// continuous operator into a T₁ space has a continuous negative.
    pub fn referee_plane() -> PolyhedralGauge {
        PolyhedralGauge::new(
            2,
            vec![
                vec![int(1), int(0)],
                vec![int(-1), int(0)],
                vec![int(0), int(1)],
            ],
            "referee_plane",
        )
        .expect("fixture is valid")
    }

    /// Truncation of the weighted ℓ∞ space to n coordinates:
    /// ‖x| = max_k max(x_k, -x_k/k). T₁ with c = 1/n.
    pub fn weighted_linf(n: usize) -> Result<PolyhedralGauge> {
        if n < 1 {
            return Err(Error::Input("weighted_linf needs n >= 1".into()));
        }
        let mut generators = Vec::with_capacity(2 * n);
        for k in 0..n {
            generators.push(linalg::unit(n, k));
        }
        for k in 0..n {
            let mut g = linalg::zeros(n);
            g[k] = rat(-1, (k + 1) as i64);
            generators.push(g);
        }
        PolyhedralGauge::new(n, generators, format!("weighted_linf({n})"))
    }

    /// Grid discretization of the sup-functional space: functions on a grid
    /// through 0 with the center sample pinned to zero, normed by
    /// ‖f| = sup f over the whole grid. The n free samples are the
    /// coordinates; the pinned center contributes the zero functional, so
    /// ‖f| = max(maxₖ fₖ, 0).
    pub fn sup_gauge(n: usize) -> Result<PolyhedralGauge> {
        if n < 1 {
            return Err(Error::Input("sup_gauge needs n >= 1".into()));
        }
        let mut generators: Vec<Vec<Rat>> = (0..n).map(|k| linalg::unit(n, k)).collect();
        generators.push(linalg::zeros(n));
        PolyhedralGauge::new(n, generators, format!("sup_gauge({n})"))
    }

    /// The symmetric ℓ∞ norm on Qⁿ: a genuine norm, c = 1.
    pub fn linf_sym(n: usize) -> Result<PolyhedralGauge> {
        if n < 1 {
            return Err(Error::Input("linf_sym needs n >= 1".into()));
        }
        let mut generators = Vec::with_capacity(2 * n);
        for k in 0..n {
            generators.push(linalg::unit(n, k));
            generators.push(linalg::neg(&linalg::unit(n, k)));
        }
        PolyhedralGauge::new(n, generators, format!("linf_sym({n})"))
    }

    /// Parse a fixture name: `upper_real`, `referee_plane`,
    /// `weighted_linf:<n>`, `sup_gauge:<n>`, or `linf_sym:<n>`.
    pub fn by_name(name: &str) -> Result<PolyhedralGauge> {
        let parse_n = |arg: Option<&str>, what: &str| -> Result<usize> {
            let arg =
                arg.ok_or_else(|| Error::Input(format!("{what} needs :<n>, e.g. {what}:3")))?;
            arg.parse::<usize>()
                .map_err(|_| Error::Input(format!("bad fixture size {arg:?} for {what}")))
        };
        let (head, arg) = match name.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (name, None),
        };
        match head {
            "upper_real" => Ok(upper_real()),
            "referee_plane" => Ok(referee_plane()),
            "weighted_linf" => weighted_linf(parse_n(arg, "weighted_linf")?),
            "sup_gauge" => sup_gauge(parse_n(arg, "sup_gauge")?),
            "linf_sym" => linf_sym(parse_n(arg, "linf_sym")?),
            _ => Err(Error::Input(format!(
                "unknown fixture {name:?}; expected upper_real, referee_plane, \
                 weighted_linf:<n>, sup_gauge:<n>, or linf_sym:<n>"
            ))),
        }
    }

    /// True iff `name` has the shape of a fixture reference.
    pub fn looks_like_fixture(name: &str) -> bool {
        let head = name.split_once(':').map_or(name, |(h, _)| h);
        matches!(
            head,
            "upper_real" | "referee_plane" | "weighted_linf" | "sup_gauge" | "linf_sym"
        )
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::error::GaugeDefect;

    fn pt(coords: &[i64]) -> Vec<Rat> {
        coords.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn construction_validates_axioms() {
        // max(0, t) is valid
        assert!(PolyhedralGauge::new(1, vec![vec![int(0)], vec![int(1)]], "").is_ok());
        // max(t) alone is negative at t = -1
        match PolyhedralGauge::new(1, vec![vec![int(1)]], "") {
            Err(Error::InvalidGauge(GaugeDefect::NotNonnegative { .. })) => {}
            other => panic!("expected positivity rejection, got {other:?}"),
        }
        // {(1,0), (-1,0)} leaves (0,1) with both norms zero
        match PolyhedralGauge::new(2, vec![pt(&[1, 0]), pt(&[-1, 0])], "") {
            Err(Error::InvalidGauge(GaugeDefect::Degenerate { .. })) => {}
            other => panic!("expected separation rejection, got {other:?}"),
        }
    }

    #[test]
    fn upper_real_evaluations() {
        let g = upper_real();
        assert_eq!(g.eval(&pt(&[3])).unwrap(), int(3));
        assert_eq!(g.eval(&pt(&[-2])).unwrap(), int(0));
        assert_eq!(g.eval_reverse(&pt(&[3])).unwrap(), int(0));
        assert_eq!(g.symmetric_norm(&pt(&[-2])).unwrap(), int(2));
    }

    #[test]
    fn weighted_linf_witness_values() {
        // ‖e_n| = 1 and ‖-e_n| = 1/n on the truncated weighted space.
        let g = weighted_linf(3).unwrap();
        let e3 = pt(&[0, 0, 1]);
        assert_eq!(g.eval(&e3).unwrap(), int(1));
        assert_eq!(g.eval_reverse(&e3).unwrap(), rat(1, 3));
        assert_eq!(g.symmetric_norm(&e3).unwrap(), int(1));
    }

    #[test]
    fn referee_plane_evaluations() {
        let g = referee_plane();
        assert_eq!(g.eval(&pt(&[0, -1])).unwrap(), int(0));
        assert_eq!(g.eval_reverse(&pt(&[0, 1])).unwrap(), int(0));
        assert_eq!(g.eval(&pt(&[2, 0])).unwrap(), int(2));
    }

    #[test]
    fn symmetrization() {
        let g = upper_real();
        let s = g.symmetrize();
        // |t| on a few points, and pointwise equality with symmetric_norm
        for t in [-3i64, -1, 0, 2, 5] {
            let x = pt(&[t]);
            assert_eq!(s.eval(&x).unwrap(), int(t.abs()));
            assert_eq!(s.eval(&x).unwrap(), g.symmetric_norm(&x).unwrap());
            assert_eq!(s.eval(&x).unwrap(), s.eval_reverse(&x).unwrap());
        }
        assert!(s.is_symmetric());
        assert!(!g.is_symmetric());
    }

    #[test]
    fn symmetrize_is_idempotent_pointwise() {
        // symmetrizing a symmetric gauge only adds redundant generators
        let s = linf_sym(2).unwrap();
        let ss = s.symmetrize();
        for x in [pt(&[1, -2]), pt(&[0, 3]), pt(&[-4, -4])] {
            assert_eq!(ss.eval(&x).unwrap(), s.eval(&x).unwrap());
        }
    }

    #[test]
    fn sum_with_symmetric_upper_real() {
        // max(0,t) + |t| expands to max(-t, 2t)
        let g = upper_real().sum_with_symmetric();
        assert_eq!(g.eval(&[rat(1, 2)]).unwrap(), int(1));
        assert_eq!(g.eval(&[int(-1)]).unwrap(), int(1));
        for t in [-7i64, -2, 0, 1, 4] {
            let x = pt(&[t]);
            let direct = g.eval(&x).unwrap();
            let base = upper_real();
            let expected = base.eval(&x).unwrap() + base.symmetric_norm(&x).unwrap();
            assert_eq!(direct, expected);
        }
    }

    #[test]
    fn sum_with_symmetric_doubles_symmetric_gauges() {
        let g = linf_sym(2).unwrap();
        let doubled = g.sum_with_symmetric();
        let x = pt(&[3, -1]);
        assert_eq!(doubled.eval(&x).unwrap(), int(2) * g.eval(&x).unwrap());
    }

    #[test]
    fn unit_balls() {
        let ball = upper_real().unit_ball();
        // one row per generator, including the vacuous one from 0
        assert_eq!(ball.rows().len(), 2);
        assert!(ball.contains(&pt(&[-100])));
        assert!(!ball.contains(&pt(&[2])));

        let referee = referee_plane().unit_ball();
        assert_eq!(referee.rows().len(), 3);
        assert!(referee.contains(&pt(&[1, 1])));
        assert!(!referee.contains(&pt(&[2, 0])));
    }

    #[test]
    fn sup_gauge_clips_at_zero() {
        let g = sup_gauge(4).unwrap();
        assert_eq!(g.eval(&pt(&[-1, -1, -1, -1])).unwrap(), int(0));
        assert_eq!(g.eval(&pt(&[-1, 2, -1, 0])).unwrap(), int(2));
    }

    #[test]
    fn fixture_names() {
        assert_eq!(by_name("upper_real").unwrap().label(), "upper_real");
        assert_eq!(by_name("weighted_linf:4").unwrap().dim(), 4);
        assert_eq!(by_name("linf_sym:2").unwrap().dim(), 2);
        assert!(by_name("weighted_linf:0").is_err());
        assert!(by_name("weighted_linf").is_err());
        assert!(by_name("nope").is_err());
        assert!(looks_like_fixture("sup_gauge:5"));
        assert!(!looks_like_fixture("ball.json"));
    }

    #[test]
    fn canonicalization_drops_redundant_generators() {
        let g = PolyhedralGauge::new(
            1,
            vec![vec![int(0)], vec![int(1)], vec![int(1)], vec![rat(1, 2)]],
            "messy",
        )
        .unwrap();
        let c = g.canonicalized();
        assert_eq!(c.generators().len(), 2);
        for t in [-3i64, 0, 1, 9] {
            assert_eq!(c.eval(&pt(&[t])).unwrap(), g.eval(&pt(&[t])).unwrap());
        }
    }

    #[test]
    fn zero_dim_and_empty_rejected() {
        assert!(PolyhedralGauge::new(0, vec![], "").is_err());
        assert!(PolyhedralGauge::new(1, vec![], "").is_err());
    }
}
