//! Human-readable rendering. Not a stable format; use `--format json` for that.

use std::fmt::Write;

use hermsym::domains::{DomainProduct, Factor};
use hermsym::incidence::H2Flag;
use hermsym::rational::ExceptionTag;

use crate::report::*;

/// Factors joined by ` x ` without collapsing repeats into powers.
fn expanded(p: &DomainProduct) -> String {
    p.factors().iter().map(Factor::to_string).collect::<Vec<_>>().join(" x ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn render(r: &Report) -> String {
    let mut o = String::new();
    match &r.answer {
        Answer::DomainInfo(a) => domain_info(&mut o, a),
        Answer::Boundary(a) => boundary(&mut o, a),
        Answer::Incident(a) => incident(&mut o, a),
        Answer::ProductIncident(a) => product_incident(&mut o, a),
        Answer::Rational(a) => rational(&mut o, a),
        Answer::Diagram(a) => o.push_str(&a.text),
        Answer::Check(a) => check(&mut o, a),
    }
    o
}

fn domain_info(o: &mut String, a: &DomainInfo) {
    let rd = &a.restricted_roots;
    let _ = writeln!(o, "{}", a.domain);
    if a.normalized != a.domain {
        let _ = writeln!(o, "  isomorphic to {}", a.normalized);
    }
    let _ = writeln!(o, "  real rank {}, complex dimension {}, real dimension {}", a.real_rank, a.complex_dim, a.dim_real);
    let _ = writeln!(
        o,
        "  restricted roots {}{}, multiplicities ξi±ξj {}, 2ξi {}, ξi {}",
        rd.system_type, rd.t, rd.mult_short_pair, rd.mult_long, rd.mult_very_short
    );
    let _ = writeln!(o, "  tube type: {}, (ED): {}", yes_no(a.tube_type), yes_no(a.ed));
    let _ = writeln!(o, "  noncompact positive roots: {}", a.noncompact_roots);
    let roots: Vec<String> = a
        .cascade
        .iter()
        .map(|c| format!("({})", c.iter().map(i32::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    let _ = writeln!(o, "  strongly orthogonal roots: {}", roots.join(" "));
    let _ = writeln!(o, "  [{}]", a.citation);
}

fn boundary(o: &mut String, a: &BoundaryAnswer) {
    let l = &a.levi;
    let _ = writeln!(o, "F_{} of {}: {} (complex dimension {})  [{}]", a.b, a.domain, a.boundary.factor, a.boundary.complex_dim(), a.citation);
    let _ = writeln!(o, "  hermitian factor {}, reductive factor A{}, compact factor {:?}", l.hermitian_factor, l.reductive_factor_rank, l.compact_factor);
    let _ = writeln!(o, "  dim Z = {}, dim V = {}, dim U = {}, cone rank {}", l.dim_z, l.dim_v, l.dim_u, l.cone_rank);
}

fn incident(o: &mut String, a: &IncidentAnswer) {
    for p in &a.plans {
        let _ = writeln!(o, "{}  [{}]", p.plan.factors, p.plan.source_row);
        let h2 = match (p.plan.h2, p.h2_holds) {
            (H2Flag::Unlisted, _) => "not listed".to_string(),
            (f, Some(h)) => format!("{f} ({})", if h { "holds" } else { "fails" }),
            (f, None) => f.to_string(),
        };
        let c = &p.conditions;
        let _ = writeln!(
            o,
            "    h2: {h2}; conditions {:?}: 1) {}, 2) {}, 3) {}",
            c.family,
            yes_no(c.c1),
            yes_no(c.c2),
            yes_no(c.c3)
        );
    }
}

fn product_incident(o: &mut String, a: &ProductIncidentAnswer) {
    let _ = writeln!(o, "boundary component {}", a.boundary);
    for s in &a.subdomains {
        let _ = writeln!(o, "{s}  [{}]", a.citation);
    }
}

fn rational(o: &mut String, a: &RationalAnswer) {
    let _ = writeln!(o, "{} = {}, k-rank {}, {} real place(s): {}", a.index, a.name, a.k_rank, a.arch.degree(), a.arch);
    let forms: Vec<String> = a.real_forms.iter().map(ToString::to_string).collect();
    let _ = writeln!(o, "  real forms: {}", forms.join(", "));
    let _ = writeln!(o, "  split over R: {}", yes_no(a.split_over_r));
    for s in &a.steps {
        let rb = &s.boundary;
        let p = &s.plan;
        let fbs: Vec<String> = rb.per_place_factor.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            o,
            "b = {}: F_b = {} per place (c = {:?}), zero-dimensional: {}, anisotropic hermitian Levi: {}",
            rb.b,
            fbs.join(", "),
            rb.per_place_c,
            yes_no(rb.is_zero_dimensional),
            yes_no(s.anisotropic_hermitian_levi)
        );
        let _ = writeln!(o, "  construction {}  [{}]", p.construction, p.source_row);
        if let (Some(l), Some(z)) = (&p.levi, &p.centralizer) {
            let real = p.centralizer_real.as_deref().unwrap_or("-");
            let _ = writeln!(o, "  L = {l}, Z_G(L) = {z}, Z_G(L)(R) = {real}");
        }
        for (i, pp) in p.per_place.iter().enumerate() {
            let _ = writeln!(o, "  place {}: {}  [{}]", i + 1, expanded(&pp.plan.factors), pp.plan.source_row);
        }
        let _ = writeln!(o, "  condition 1): {}, condition 4): {}", yes_no(p.c1()), yes_no(p.cond4));
        match p.exception {
            ExceptionTag::None => {}
            ExceptionTag::C2_2n_n => {
                let _ = writeln!(
                    o,
                    "  exception C^(2)_{{2n,n}}: real domain {} per place; minimal only over k",
                    expanded(&p.per_place[0].plan.factors)
                );
            }
            ExceptionTag::C2_2_1 => {
                let _ = writeln!(
                    o,
                    "  exception C^(2)_{{2,1}}: real domain {} per place does not have full rank",
                    expanded(&p.per_place[0].plan.factors)
                );
            }
        }
    }
}

fn check(o: &mut String, a: &CheckAnswer) {
    for c in &a.outcomes {
        if c.passed() {
            let _ = writeln!(o, "PASS  {} ({} cases)", c.name, c.cases);
        } else {
            let _ = writeln!(o, "FAIL  {} ({} of {} cases)", c.name, c.failed, c.cases);
            for e in &c.examples {
                let _ = writeln!(o, "        {e}");
            }
        }
    }
    let _ = writeln!(o, "{:?} grid: {} passed, {} failed", a.grid, a.passed, a.failed);
}
