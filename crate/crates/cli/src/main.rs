mod report;
mod text;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hermsym::checks::{self, Grid};
use hermsym::diagram::{index_diagram, restricted_diagram};
use hermsym::domains::{DomainProduct, IrreducibleDomain};
use hermsym::incidence::{condition_family, incident_subdomain, is_ed, product_incident_subdomain, verify_conditions};
use hermsym::parabolic::{boundary_component, levi_decomposition, product_boundary_component};
use hermsym::rational::{
    anisotropic_hermitian_levi, incident_qsubgroup, is_split_over_R, rational_boundary, validate_index,
    ArchimedeanData, KIndex, QGroup,
};

use report::*;

#[derive(Parser)]
#[command(name = "hermsym", version, about = "Hermitian symmetric domains, boundary components and incident subdomains")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Rank, dimensions, restricted roots and the strongly orthogonal roots of a domain.
    #[command(name = "domain_info")]
    DomainInfo { domain: String },
    /// Boundary component and Levi decomposition of the b-th maximal parabolic.
    Boundary { domain: String, b: u32 },
    /// Incident symmetric subdomains. For a product, give one b per factor
    /// as a comma list, 0 leaving a factor alone.
    Incident { domain: String, b: String },
    /// Rational boundary components and incident k-subgroups of an index.
    Rational {
        index: String,
        /// One datum per real place: `(p,q)`, `def` or `split`, comma separated.
        #[arg(long)]
        arch: Option<String>,
        b: Option<u32>,
    },
    /// ASCII picture of a domain's restricted roots or of an index.
    Diagram { target: String },
    /// Run the invariant suite over a grid.
    Check {
        #[arg(long, default_value = "small")]
        grid: Grid,
    },
}

/// A failure with its exit code: 1 for parse errors, 2 for validation.
struct Failure {
    kind: ErrorKind,
    message: String,
    violations: Vec<String>,
}

impl Failure {
    fn parse(message: impl ToString) -> Failure {
        Failure { kind: ErrorKind::Parse, message: message.to_string(), violations: Vec::new() }
    }

    fn invalid(message: impl ToString) -> Failure {
        Failure { kind: ErrorKind::Validation, message: message.to_string(), violations: Vec::new() }
    }

    fn code(&self) -> u8 {
        match self.kind {
            ErrorKind::Parse => 1,
            ErrorKind::Validation => 2,
        }
    }
}

fn parse_domain(s: &str) -> Result<IrreducibleDomain, Failure> {
    let d: IrreducibleDomain = s.parse().map_err(Failure::parse)?;
    if d == IrreducibleDomain::IV(2) {
        return Err(Failure::invalid("IV(2) is reducible and only occurs as a factor"));
    }
    Ok(if d.is_primary() { d } else { d.normalize() })
}

fn domain_info(d: IrreducibleDomain) -> Result<Answer, Failure> {
    let real = d.noncompact_realization().map_err(Failure::invalid)?;
    Ok(Answer::DomainInfo(DomainInfo {
        domain: d,
        normalized: d.normalize(),
        real_rank: d.real_rank(),
        dim_real: d.dim_real(),
        complex_dim: d.complex_dim(),
        tube_type: d.is_tube_type(),
        ed: is_ed(&d),
        restricted_roots: d.restricted_root_datum(),
        noncompact_roots: real.sigma_plus.len(),
        cascade: real.cascade().into_iter().map(|r| r.0).collect(),
        citation: "classification of irreducible bounded symmetric domains".into(),
    }))
}

fn boundary(d: IrreducibleDomain, b: u32) -> Result<Answer, Failure> {
    let boundary = boundary_component(&d, b).map_err(Failure::invalid)?;
    let levi = levi_decomposition(&d, b).map_err(Failure::invalid)?;
    Ok(Answer::Boundary(BoundaryAnswer { domain: d, b, boundary, levi, citation: "Table 1, column F_b".into() }))
}

fn parse_bs(s: &str) -> Result<Vec<u32>, Failure> {
    s.split(',').map(|x| x.trim().parse::<u32>().map_err(|_| Failure::parse(format!("bad b {x:?}")))).collect()
}

fn incident(target: &str, b: &str) -> Result<Answer, Failure> {
    if target.parse::<IrreducibleDomain>().is_ok() {
        let d = parse_domain(target)?;
        let b: u32 = b.trim().parse().map_err(|_| Failure::parse(format!("bad b {b:?}")))?;
        let plans = incident_subdomain(&d, b).map_err(Failure::invalid)?;
        let plans = plans
            .into_iter()
            .map(|plan| {
                let conditions = verify_conditions(&d, b, &plan).map_err(Failure::invalid)?;
                Ok(CheckedPlan { h2_holds: plan.h2.holds_for(&d), plan, conditions })
            })
            .collect::<Result<_, Failure>>()?;
        return Ok(Answer::Incident(IncidentAnswer { domain: d, b, family: condition_family(&d, b), plans }));
    }
    let prod: DomainProduct = target.parse().map_err(Failure::parse)?;
    let bs = parse_bs(b)?;
    let boundary = product_boundary_component(&prod, &bs).map_err(Failure::invalid)?;
    let subdomains = product_incident_subdomain(&prod, &bs).map_err(Failure::invalid)?;
    Ok(Answer::ProductIncident(ProductIncidentAnswer {
        domain: prod,
        b: bs,
        boundary,
        subdomains,
        citation: "Tables 1 and 2, factor by factor".into(),
    }))
}

fn rational(index: &str, arch: Option<&str>, b: Option<u32>) -> Result<Answer, Failure> {
    let ix: KIndex = index.parse().map_err(Failure::parse)?;
    let tags = validate_index(&ix).map_err(|v| Failure {
        kind: ErrorKind::Validation,
        message: format!("{ix} violates the index constraints"),
        violations: v.iter().map(|x| x.to_string()).collect(),
    })?;
    let arch = match arch {
        Some(a) => a.parse::<ArchimedeanData>().map_err(Failure::parse)?,
        None => ArchimedeanData::default_for(&ix)
            .ok_or_else(|| Failure::invalid(format!("{ix} needs --arch with one signature per real place")))?,
    };
    let g = QGroup::new(ix, arch).map_err(|v| Failure {
        kind: ErrorKind::Validation,
        message: "inconsistent archimedean data".into(),
        violations: v.iter().map(|x| x.to_string()).collect(),
    })?;
    let bs: Vec<u32> = match b {
        Some(b) => vec![b],
        None => (1..=g.rank()).collect(),
    };
    let mut steps = Vec::new();
    for b in bs {
        steps.push(RationalStep {
            boundary: rational_boundary(&g, b).map_err(Failure::invalid)?,
            anisotropic_hermitian_levi: anisotropic_hermitian_levi(&g, b).map_err(Failure::invalid)?,
            plan: incident_qsubgroup(&g, b).map_err(Failure::invalid)?,
        });
    }
    Ok(Answer::Rational(RationalAnswer {
        index: ix,
        name: ix.display_name(),
        arch: g.arch.clone(),
        k_rank: g.rank(),
        zero_dim_capable: tags.zero_dim_capable,
        real_forms: g.real_forms().to_vec(),
        split_over_r: is_split_over_R(&g),
        steps,
    }))
}

fn diagram(target: &str) -> Result<Answer, Failure> {
    let text = match target.parse::<IrreducibleDomain>() {
        Ok(_) => restricted_diagram(&parse_domain(target)?),
        Err(domain_err) => match target.parse::<KIndex>() {
            Ok(ix) => {
                validate_index(&ix).map_err(|v| Failure {
                    kind: ErrorKind::Validation,
                    message: format!("{ix} violates the index constraints"),
                    violations: v.iter().map(|x| x.to_string()).collect(),
                })?;
                index_diagram(&ix)
            }
            Err(_) => return Err(Failure::parse(format!("{domain_err}; not an index either"))),
        },
    };
    Ok(Answer::Diagram(DiagramAnswer { text }))
}

fn check(grid: Grid) -> Answer {
    let outcomes = checks::run(grid);
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    Answer::Check(CheckAnswer { grid, passed, failed: outcomes.len() - passed, outcomes })
}

fn run(cmd: &Command) -> Result<(String, Answer), Failure> {
    Ok(match cmd {
        Command::DomainInfo { domain } => (domain.clone(), domain_info(parse_domain(domain)?)?),
        Command::Boundary { domain, b } => (domain.clone(), boundary(parse_domain(domain)?, *b)?),
        Command::Incident { domain, b } => (domain.clone(), incident(domain, b)?),
        Command::Rational { index, arch, b } => (index.clone(), rational(index, arch.as_deref(), *b)?),
        Command::Diagram { target } => (target.clone(), diagram(target)?),
        Command::Check { grid } => (format!("{grid:?}").to_lowercase(), check(*grid)),
    })
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::DomainInfo { .. } => "domain_info",
        Command::Boundary { .. } => "boundary",
        Command::Incident { .. } => "incident",
        Command::Rational { .. } => "rational",
        Command::Diagram { .. } => "diagram",
        Command::Check { .. } => "check",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli.command) {
        Ok((target, answer)) => {
            let failed_checks = matches!(&answer, Answer::Check(c) if c.failed > 0);
            let report =
                Report { schema_version: SCHEMA_VERSION, command: command_name(&cli.command).into(), target, answer };
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("serializable")),
                Format::Text => print!("{}", text::render(&report)),
            }
            if failed_checks {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            match cli.format {
                Format::Json => {
                    let e = ErrorReport {
                        schema_version: SCHEMA_VERSION,
                        error: f.kind,
                        message: f.message.clone(),
                        violations: f.violations.clone(),
                    };
                    println!("{}", serde_json::to_string_pretty(&e).expect("serializable"));
                }
                Format::Text => {
                    eprintln!("error: {}", f.message);
                    for v in &f.violations {
                        eprintln!("  violated: {v}");
                    }
                }
            }
            ExitCode::from(f.code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trip(cmd: Command) {
        let (target, answer) = run(&cmd).unwrap_or_else(|f| panic!("{}", f.message));
        let r = Report { schema_version: SCHEMA_VERSION, command: command_name(&cmd).into(), target, answer };
        let json = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
    }

    #[test]
    fn reports_round_trip() {
        round_trip(Command::DomainInfo { domain: "VI".into() });
        round_trip(Command::Boundary { domain: "I(5,3)".into(), b: 2 });
        round_trip(Command::Incident { domain: "V".into(), b: "2".into() });
        round_trip(Command::Incident { domain: "I(3,2) x III(2)".into(), b: "1,2".into() });
        round_trip(Command::Rational { index: "2A(3;5,1)".into(), arch: Some("(3,3),(3,3)".into()), b: None });
        round_trip(Command::Rational { index: "E7-31".into(), arch: None, b: Some(2) });
        round_trip(Command::Diagram { target: "E6-28".into() });
        round_trip(Command::Check { grid: Grid::Small });
    }
}
