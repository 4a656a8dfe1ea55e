//! Command-line front end for the `isocoh` library.
//!
//! Exit codes: 0 on success, 1 on a domain error (bad parameters for the
//! mathematics, malformed polynomial input), 2 on a usage error.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::{json, Value};

use isocoh::partitions::{enumerate_partitions, KStrictPartition};
use isocoh::presentations::{
    torsion_report, GradedQuotient, LieType, RingPresentation, DEFAULT_DEGREE_CAP,
};
use isocoh::springer::{
    is_omega1_polynomial, theta_torus, GroupFamily, GroupSpec, LaurentCharacter, SpringerError,
    TorusElement,
};
use isocoh::xi::{diagram_check, injectivity_scan, nonsurjectivity_witness, xi_generator_image};

#[derive(Parser, Debug)]
#[command(
    name = "isocoh",
    version,
    about = "Exact cohomology of isotropic Grassmannians and the maps into it"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the defining relations of a ring.
    Relations {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Ranks of the ring in each even degree.
    Betti {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Smith-form diagnostics of the integral ideal, degree by degree.
    Torsion {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Normal form of the image of the generator e_i.
    XiImage {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        i: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Degree-by-degree injectivity scan of the stable map.
    Inject {
        #[arg(long, value_enum, ignore_case = true)]
        family: RingFamily,
        #[arg(long)]
        k: u32,
        #[arg(long = "degree-cap", default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check that the maps commute with the transition from n+1 to n.
    DiagramCheck {
        #[arg(long, value_enum, ignore_case = true)]
        family: RingFamily,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// A degree where the stable map misses a class.
    Witness {
        #[arg(long, value_enum, ignore_case = true)]
        family: RingFamily,
        #[arg(long)]
        k: u32,
        #[arg(long = "degree-cap", default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The Springer map on a torus element: prints x_i = (t_i - 1/t_i)/2.
    Springer {
        #[arg(long, value_enum, ignore_case = true)]
        family: Group,
        #[arg(long)]
        n: usize,
        /// Comma-separated rationals, e.g. `3,2` or `1/2,5/3`.
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<String>,
    },
    /// Decide whether a Laurent polynomial is a symmetric polynomial in ((t_i - 1/t_i)/2)^2.
    CharTest {
        #[arg(long)]
        n: usize,
        /// File holding the polynomial, e.g. `3/4*t1^2*t2^-1 + 1`; stdin when absent.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// List k-strict partitions in the (n-k) x (n+k) rectangle.
    Partitions {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        size: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct RingArgs {
    #[arg(long, value_enum, ignore_case = true)]
    family: RingFamily,
    #[arg(long, required_unless_present = "stable", conflicts_with = "stable")]
    n: Option<u32>,
    #[arg(long)]
    k: u32,
    /// Use the stable ring, truncated at the degree cap.
    #[arg(long)]
    stable: bool,
    /// Type B only: the subring generated by c_i = delta_i tau_i.
    #[arg(long, requires = "stable")]
    subring: bool,
    /// Defaults to 16 for stable rings and to the top degree for finite ones.
    #[arg(long = "degree-cap")]
    degree_cap: Option<u32>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RingFamily {
    C,
    B,
}

impl From<RingFamily> for LieType {
    fn from(f: RingFamily) -> Self {
        match f {
            RingFamily::C => LieType::C,
            RingFamily::B => LieType::B,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Group {
    Sp,
    So,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl<E: Into<isocoh::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Domain(e.into().to_string())
    }
}

type Output = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nFor more information, try '--help'.");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Output {
    match command {
        Command::Relations { ring, format } => relations(&ring, format),
        Command::Betti { ring, format } => betti(&ring, format),
        Command::Torsion { ring, format } => torsion(&ring, format),
        Command::XiImage { ring, i, format } => xi_image(&ring, i, format),
        Command::Inject {
            family,
            k,
            degree_cap,
            format,
        } => inject(family.into(), k, degree_cap, format),
        Command::DiagramCheck { family, n, k } => {
            let holds = diagram_check(n, k, family.into())?;
            Ok(format!(
                "# family {} n={n} k={k}\ndiagram commutes: {holds}\n",
                LieType::from(family)
            ))
        }
        Command::Witness {
            family,
            k,
            degree_cap,
            format,
        } => witness(family.into(), k, degree_cap, format),
        Command::Springer { family, n, t } => springer(family, n, &t),
        Command::CharTest { n, input } => char_test(n, input),
        Command::Partitions { n, k, size, format } => partitions(n, k, size, format),
    }
}

fn reject(format: Format, allowed: &[Format], command: &str) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::Usage(
            format!("{command} does not support --format {format:?}").to_lowercase(),
        ))
    }
}

/// The presentation named by the flags, with the degree cap to use.
fn presentation(ring: &RingArgs) -> Result<(RingPresentation, u32), Failure> {
    let ty = LieType::from(ring.family);
    if ring.subring && ty != LieType::B {
        return Err(Failure::Usage(
            "--subring applies to --family B only".into(),
        ));
    }
    let pres = match ring.n {
        Some(n) => RingPresentation::finite(ty, n, ring.k)?,
        None => {
            let cap = ring.degree_cap.unwrap_or(DEFAULT_DEGREE_CAP);
            if ring.subring {
                RingPresentation::stable_b_subring(ring.k, cap)?
            } else {
                RingPresentation::stable(ty, ring.k, cap)?
            }
        }
    };
    let cap = ring.degree_cap.unwrap_or_else(|| pres.natural_cap());
    Ok((pres, cap))
}

fn header(pres: &RingPresentation, cap: u32) -> String {
    let mut out = format!("# {}, degree cap {cap}\n", pres.family());
    for w in pres.warnings() {
        let _ = writeln!(out, "# warning: {w}");
    }
    out
}

fn relations(ring: &RingArgs, format: Format) -> Output {
    reject(format, &[Format::Text, Format::Json], "relations")?;
    let (pres, cap) = presentation(ring)?;
    if format == Format::Json {
        let rels: Vec<Value> = pres
            .relations()
            .iter()
            .map(|r| json!({"label": r.label, "poly": r.poly.to_json()}))
            .collect();
        return Ok(pretty(&json!({
            "family": pres.family().to_string(),
            "degree_cap": cap,
            "warnings": pres.warnings(),
            "relations": rels,
        })));
    }
    let mut out = header(&pres, cap);
    for r in pres.relations() {
        let _ = writeln!(out, "{}: {}", r.label, r.poly);
    }
    Ok(out)
}

fn betti(ring: &RingArgs, format: Format) -> Output {
    let (pres, cap) = presentation(ring)?;
    let q = GradedQuotient::<BigRational>::build(&pres, cap)?;
    let ranks = q.ranks();
    match format {
        Format::Json => Ok(pretty(&json!({
            "family": pres.family().to_string(),
            "degree_cap": cap,
            "ranks": ranks.iter().map(|(d, r)| json!({"degree": d, "rank": r})).collect::<Vec<_>>(),
        }))),
        Format::Csv => {
            let mut out = header(&pres, cap);
            out.push_str("degree,rank\n");
            for (d, r) in ranks {
                let _ = writeln!(out, "{d},{r}");
            }
            Ok(out)
        }
        Format::Text => {
            let mut out = header(&pres, cap);
            for (d, r) in ranks {
                let _ = writeln!(out, "degree {d}: rank {r}");
            }
            Ok(out)
        }
    }
}

fn torsion(ring: &RingArgs, format: Format) -> Output {
    let (pres, cap) = presentation(ring)?;
    let report = torsion_report(&pres, cap)?;
    let factors = |f: &[num_bigint::BigInt]| f.iter().map(|d| d.to_string()).collect::<Vec<_>>();
    match format {
        Format::Json => Ok(pretty(&json!({
            "family": pres.family().to_string(),
            "degree_cap": cap,
            "degrees": report.iter().map(|e| json!({
                "degree": e.degree,
                "monomials": e.monomials,
                "ideal_rank": e.ideal_rank,
                "free_rank": e.free_rank,
                "torsion_factors": factors(&e.torsion_factors),
            })).collect::<Vec<_>>(),
        }))),
        Format::Csv => {
            let mut out = header(&pres, cap);
            out.push_str("degree,monomials,ideal_rank,free_rank,torsion\n");
            for e in &report {
                let _ = writeln!(
                    out,
                    "{},{},{},{},{}",
                    e.degree,
                    e.monomials,
                    e.ideal_rank,
                    e.free_rank,
                    factors(&e.torsion_factors).join(";")
                );
            }
            Ok(out)
        }
        Format::Text => {
            let mut out = header(&pres, cap);
            for e in &report {
                let t = if e.torsion_factors.is_empty() {
                    "free".to_string()
                } else {
                    format!("torsion {}", factors(&e.torsion_factors).join(", "))
                };
                let _ = writeln!(out, "degree {}: rank {}, {t}", e.degree, e.free_rank);
            }
            Ok(out)
        }
    }
}

fn xi_image(ring: &RingArgs, i: u32, format: Format) -> Output {
    reject(format, &[Format::Text, Format::Json], "xi-image")?;
    let (pres, cap) = presentation(ring)?;
    let cap = if ring.degree_cap.is_none() && ring.n.is_some() {
        cap.max(4 * i)
    } else {
        cap
    };
    let q = GradedQuotient::<BigRational>::build(&pres, cap)?;
    let image = xi_generator_image(i, &q)?.lift();
    if format == Format::Json {
        return Ok(pretty(&json!({
            "family": pres.family().to_string(),
            "degree_cap": cap,
            "generator": format!("e{i}"),
            "image": image.to_json(),
        })));
    }
    Ok(format!("{}e{i} -> {image}\n", header(&pres, cap)))
}

fn inject(ty: LieType, k: u32, cap: u32, format: Format) -> Output {
    reject(format, &[Format::Text, Format::Json], "inject")?;
    let report = injectivity_scan(k, ty, cap)?;
    if format == Format::Json {
        return Ok(pretty(&report.to_json()));
    }
    let mut out = format!(
        "# family {ty} k={k}, codomain {}, degree cap {cap}\n",
        report.codomain
    );
    for d in &report.degrees {
        let _ = writeln!(
            out,
            "degree {}: domain {}, codomain {}, image rank {} (mod 2: {}), kernel {}",
            d.degree,
            d.domain_dim,
            d.codomain_rank,
            d.image_rank_q,
            d.image_rank_mod2,
            d.kernel_basis.len()
        );
    }
    let _ = writeln!(
        out,
        "injective up to degree {cap}: {}",
        report.is_injective()
    );
    Ok(out)
}

fn witness(ty: LieType, k: u32, cap: u32, format: Format) -> Output {
    reject(format, &[Format::Text, Format::Json], "witness")?;
    let w = nonsurjectivity_witness(k, ty, cap)?;
    if format == Format::Json {
        let mut v = w.to_json();
        v["degree_cap"] = json!(cap);
        return Ok(pretty(&v));
    }
    Ok(format!(
        "# {}, degree cap {cap}\ndegree {}: domain rank {}, codomain rank {}, missed {}\n",
        w.codomain,
        w.degree,
        w.domain_dim,
        w.codomain_rank,
        w.missed_classes.join(", ")
    ))
}

fn springer(family: Group, n: usize, t: &[String]) -> Output {
    let family = match family {
        Group::Sp => GroupFamily::Sp,
        Group::So => GroupFamily::So,
    };
    let coords: Vec<BigRational> = t
        .iter()
        .map(|s| {
            s.trim()
                .parse::<BigRational>()
                .map_err(|_| Failure::Domain(format!("not a rational number: {s:?}")))
        })
        .collect::<Result<_, _>>()?;
    let group = GroupSpec::new(family, n)?;
    let x = theta_torus(&TorusElement::new(group, coords)?);
    let rendered: Vec<String> = x.coordinates().iter().map(|v| v.to_string()).collect();
    Ok(format!("{}\n", rendered.join(", ")))
}

fn char_test(n: usize, input: Option<PathBuf>) -> Output {
    let text = match input {
        Some(path) => std::fs::read_to_string(&path)
            .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Domain(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    let f = LaurentCharacter::parse(text.trim(), n)?;
    Ok(match is_omega1_polynomial(&f) {
        Ok(Some(p)) => format!("{p}\n"),
        Ok(None) => "NOT-POLYNOMIAL\n".to_string(),
        Err(SpringerError::NotInvariant) => "NOT-INVARIANT\n".to_string(),
        Err(e) => return Err(e.into()),
    })
}

fn partitions(n: u32, k: u32, size: Option<u32>, format: Format) -> Output {
    reject(format, &[Format::Text, Format::Json], "partitions")?;
    let list = enumerate_partitions(k, n, size)?;
    if format == Format::Json {
        return Ok(pretty(&json!({
            "n": n,
            "k": k,
            "size": size,
            "partitions": list.iter().map(KStrictPartition::to_json).collect::<Vec<_>>(),
        })));
    }
    let mut out = String::new();
    for p in &list {
        let _ = writeln!(out, "{p}");
    }
    Ok(out)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
