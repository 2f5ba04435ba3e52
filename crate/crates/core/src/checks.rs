//! The cross-module invariant suite, run over a standard grid of domains and
//! k-groups.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::domains::{DomainProduct, IrreducibleDomain};
use crate::incidence::{incident_subdomain, is_ed, verify_conditions, H2Flag, PlanKind};
use crate::parabolic::{boundary_component, levi_decomposition};
use crate::rational::{
    c_map, incident_qsubgroup, is_split_over_R, rational_boundary, ArchimedeanData, ExceptionTag,
    KIndex, PlaceDatum, QGroup,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Grid {
    /// Parameters up to 6, `d, s ≤ 3`, up to two places.
    Small,
    /// `p, q ≤ 10`, `n ≤ 12`, `d, s ≤ 5`, up to three places.
    Full,
}

struct Bounds {
    pq: u32,
    n: u32,
    ds: u32,
    places: usize,
}

impl Grid {
    fn bounds(self) -> Bounds {
        match self {
            Grid::Small => Bounds { pq: 6, n: 6, ds: 3, places: 2 },
            Grid::Full => Bounds { pq: 10, n: 12, ds: 5, places: 3 },
        }
    }
}

impl std::str::FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "small" => Ok(Grid::Small),
            "full" => Ok(Grid::Full),
            _ => Err(format!("unknown grid {s:?}, expected small or full")),
        }
    }
}

/// Outcome of one invariant over the grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: usize,
    pub failed: usize,
    /// The first few failing cases.
    pub examples: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

const MAX_EXAMPLES: usize = 5;

struct Check(CheckOutcome);

impl Check {
    fn new(name: &str) -> Check {
        Check(CheckOutcome { name: name.into(), cases: 0, failed: 0, examples: Vec::new() })
    }

    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.0.cases += 1;
        if !ok {
            self.0.failed += 1;
            if self.0.examples.len() < MAX_EXAMPLES {
                self.0.examples.push(what());
            }
        }
    }
}

/// Primary domains of every class within the grid bounds.
pub fn domain_grid(grid: Grid) -> Vec<IrreducibleDomain> {
    use IrreducibleDomain::*;
    let b = grid.bounds();
    let mut out = Vec::new();
    for p in 1..=b.pq {
        for q in 1..=p {
            out.push(I { p, q });
        }
    }
    out.extend((3..=b.n).map(II));
    out.extend((2..=b.n).map(III));
    out.extend((3..=b.n).map(IV));
    out.push(V);
    out.push(VI);
    out.retain(IrreducibleDomain::is_primary);
    out
}

fn multisets(items: &[PlaceDatum], f: usize) -> Vec<Vec<PlaceDatum>> {
    if f == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, it) in items.iter().enumerate() {
        for rest in multisets(&items[i..], f - 1) {
            let mut v = vec![*it];
            v.extend(rest);
            out.push(v);
        }
    }
    out
}

/// Every valid group whose index and archimedean data fit the grid.
pub fn index_grid(grid: Grid) -> Vec<QGroup> {
    let bd = grid.bounds();
    let sig = |p, q| PlaceDatum::Signature { p, q };
    let flags = [PlaceDatum::Definite, PlaceDatum::Split];
    let mut out = Vec::new();
    let mut add = |ix: KIndex, choices: &[PlaceDatum]| {
        for f in 1..=bd.places {
            for places in multisets(choices, f) {
                if let Ok(g) = QGroup::new(ix, ArchimedeanData(places)) {
                    out.push(g);
                }
            }
        }
    };
    for n in 1..=bd.n {
        for s in 1..=bd.ds {
            for d in 1..=bd.ds {
                let sigs: Vec<_> = (s * d..=n.div_ceil(2)).map(|q| sig(n + 1 - q, q)).collect();
                add(KIndex::A2 { d, n, s }, &sigs);
            }
            add(KIndex::D2Inner { n, s }, &flags);
            add(KIndex::D2Outer { n, s }, &flags);
            add(KIndex::C2 { n, s }, &[PlaceDatum::Split]);
            if s <= 2 {
                add(KIndex::IV { n, s }, &[sig(n, 2)]);
            }
            if 2 * s <= n + 1 {
                add(KIndex::ASplit { n, q: s }, &[sig(n + 1 - s, s)]);
            }
        }
        add(KIndex::C1 { n }, &[PlaceDatum::Split]);
    }
    add(KIndex::E6_28, &[PlaceDatum::Split]);
    add(KIndex::E7_31, &[PlaceDatum::Split]);
    out
}

fn domain_checks(domains: &[IrreducibleDomain]) -> Vec<CheckOutcome> {
    let mut dim = Check::new("dimension from multiplicities");
    let mut sigma = Check::new("sigma-plus abelian of size dim_C");
    let mut cascade = Check::new("cascade strongly orthogonal of length t");
    let mut norm = Check::new("normalize idempotent, rank and dimension preserved");
    let mut siegel = Check::new("Siegel identity, dim V even");
    let mut nesting = Check::new("boundary components nest");
    let mut rank = Check::new("real plans preserve rank");
    let mut conds = Check::new("catalog plans satisfy their conditions");
    let mut tube = Check::new("h2 plans of tube domains are tube");
    let mut ed = Check::new("(ED) law at b = t");
    let mut trip = Check::new("domain strings round-trip");

    for d in domains {
        let t = d.real_rank();
        dim.case(d.restricted_root_datum().dim_real() == d.dim_real(), || d.to_string());

        match d.noncompact_realization() {
            Ok(real) => {
                sigma.case(real.is_abelian() && real.sigma_plus.len() as u32 == d.complex_dim(), || {
                    format!("{d}: |Σ⁺| = {}", real.sigma_plus.len())
                });
                let c = real.cascade();
                let pairwise = c.iter().enumerate().all(|(i, a)| {
                    c[i + 1..].iter().all(|b| real.absolute_system.is_strongly_orthogonal(a, b).unwrap_or(false))
                });
                cascade.case(pairwise && c.len() as u32 == t, || format!("{d}: length {}", c.len()));
            }
            Err(e) => {
                sigma.case(false, || e.to_string());
                cascade.case(false, || e.to_string());
            }
        }

        let n = d.normalize();
        norm.case(
            n.normalize() == n && n.real_rank() == t && n.complex_dim() == d.complex_dim(),
            || d.to_string(),
        );

        for b in 1..=t {
            let fb = boundary_component(d, b).map(|c| c.factor);
            match (levi_decomposition(d, b), &fb) {
                (Ok(l), Ok(fb)) => siegel.case(
                    l.dim_v % 2 == 0 && d.complex_dim() == fb.complex_dim() + l.dim_v / 2 + l.dim_z,
                    || format!("{d} b={b}"),
                ),
                _ => siegel.case(false, || format!("{d} b={b}: no decomposition")),
            }
            for b2 in b + 1..t {
                let direct = boundary_component(d, b2).map(|c| c.factor);
                let nested = fb
                    .as_ref()
                    .ok()
                    .and_then(|f| f.domain())
                    .and_then(|f| boundary_component(&f, b2 - b).ok())
                    .map(|c| c.factor);
                nesting.case(direct.ok() == nested, || format!("{d} b={b} b'={b2}"));
            }
            let plans = match incident_subdomain(d, b) {
                Ok(p) => p,
                Err(e) => {
                    rank.case(false, || format!("{d} b={b}: {e}"));
                    continue;
                }
            };
            for p in &plans {
                rank.case(p.factors.real_rank() == t, || format!("{d} b={b}: {}", p.factors));
                let ok = verify_conditions(d, b, p).map(|c| c.all_hold()).unwrap_or(false);
                conds.case(ok, || format!("{d} b={b}: {}", p.factors));
                if p.h2 == H2Flag::Yes && d.is_tube_type() {
                    tube.case(p.factors.is_tube_type(), || format!("{d} b={b}: {}", p.factors));
                }
            }
            if b == t {
                let poly = plans.iter().any(|p| p.kind == PlanKind::Polydisc);
                let right_len = plans.iter().all(|p| p.kind != PlanKind::Polydisc || p.factors.factors().len() as u32 == t);
                ed.case(poly == is_ed(d) && right_len, || d.to_string());
            }
        }

        let s = d.to_string();
        trip.case(s.parse::<IrreducibleDomain>().map(|x| x.to_string()) == Ok(s.clone()), || s.clone());
        let prod = DomainProduct::of(&[*d, d.normalize(), *d]).to_string();
        trip.case(prod.parse::<DomainProduct>().map(|x| x.to_string()) == Ok(prod.clone()), || prod);
    }
    [dim, sigma, cascade, norm, siegel, nesting, rank, conds, tube, ed, trip].into_iter().map(|c| c.0).collect()
}

/// Closed forms for the zero-dimensional rational boundary components.
fn zero_dim_expected(g: &QGroup, b: u32) -> bool {
    match g.index {
        KIndex::A2 { d, s, .. } => {
            b == s && g.arch.places().iter().all(|p| matches!(p, PlaceDatum::Signature { q, .. } if *q == s * d))
        }
        KIndex::D2Inner { .. } | KIndex::D2Outer { .. } | KIndex::E6_28 | KIndex::E7_31 => false,
        KIndex::C2 { n, s } => n == 2 * s && b == s,
        KIndex::C1 { n } => b == n,
        KIndex::IV { s, .. } => b == s,
        KIndex::ASplit { q, .. } => b == q,
    }
}

fn group_checks(groups: &[QGroup]) -> Vec<CheckOutcome> {
    let mut mono = Check::new("c-monotonicity");
    let mut zero = Check::new("zero-dimensional predicates");
    let mut total = Check::new("main theorem totality and exception surface");
    let mut cond4 = Check::new("cond4 fails only for C2(2,1)");
    let mut split = Check::new("split over R implies equal real forms");
    let mut agree = Check::new("rational plans agree with real plans for b < s");
    let mut mixed = Check::new("no mixed places for rank one quaternionic indices");
    let mut trip = Check::new("index strings round-trip");
    let mut seen = HashSet::new();

    for g in groups {
        let who = |b: u32| format!("{} [{}] b={b}", g.index, g.arch);
        let s = g.rank();
        for datum in g.arch.places() {
            let cs: Vec<u32> = (1..=s).map(|b| c_map(&g.index, datum, b)).collect();
            mono.case(cs.windows(2).all(|w| w[0] < w[1]), || format!("{} at {datum}: {cs:?}", g.index));
        }
        if is_split_over_R(g) {
            split.case(g.real_forms().windows(2).all(|w| w[0] == w[1]), || format!("{} [{}]", g.index, g.arch));
        }
        if g.index.is_quaternionic_skew() && s == 1 {
            let kinds: HashSet<_> = g.arch.places().iter().collect();
            mixed.case(kinds.len() == 1 || matches!(g.index, KIndex::D2Inner { n: 4, .. }), || who(1));
        }
        for b in 1..=s {
            match rational_boundary(g, b) {
                Ok(rb) => zero.case(rb.is_zero_dimensional == zero_dim_expected(g, b), || who(b)),
                Err(e) => zero.case(false, || format!("{}: {e}", who(b))),
            }
            let plan = match incident_qsubgroup(g, b) {
                Ok(p) => p,
                Err(e) => {
                    total.case(false, || format!("{}: {e}", who(b)));
                    continue;
                }
            };
            let c221 = g.index == KIndex::C2 { n: 2, s: 1 };
            let tag = match g.index {
                _ if c221 => ExceptionTag::C2_2_1,
                KIndex::C2 { n, s } if n == 2 * s && b == s => ExceptionTag::C2_2n_n,
                _ => ExceptionTag::None,
            };
            let fine = plan.exception == tag && (tag != ExceptionTag::None || plan.all_conditions_hold());
            total.case(fine, || format!("{}: {:?}", who(b), plan.exception));
            cond4.case(plan.cond4 != c221, || who(b));
            if b < s {
                for ((pp, real), datum) in plan.per_place.iter().zip(g.real_forms()).zip(g.arch.places()) {
                    let c = c_map(&g.index, datum, b);
                    let positive = boundary_component(real, c).map(|f| !f.factor.is_point()).unwrap_or(false);
                    if positive {
                        let want = incident_subdomain(real, c).ok().and_then(|v| v.into_iter().next());
                        agree.case(want.map(|w| w.factors) == Some(pp.plan.factors.clone()), || who(b));
                    }
                }
            }
        }
        if seen.insert(g.index) {
            let text = g.index.to_string();
            trip.case(text.parse::<KIndex>().ok() == Some(g.index), || text.clone());
            let arch = g.arch.to_string();
            trip.case(arch.parse::<ArchimedeanData>().ok().as_ref() == Some(&g.arch), || arch.clone());
        }
    }
    [mono, zero, total, cond4, split, agree, mixed, trip].into_iter().map(|c| c.0).collect()
}

/// Runs every invariant over the grid.
pub fn run(grid: Grid) -> Vec<CheckOutcome> {
    let mut out = domain_checks(&domain_grid(grid));
    out.extend(group_checks(&index_grid(grid)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_passes() {
        for c in run(Grid::Small) {
            assert!(c.passed(), "{}: {:?}", c.name, c.examples);
            assert!(c.cases > 0, "{} ran no cases", c.name);
        }
    }
}
