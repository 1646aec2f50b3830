//! Command-line interface: deterministic text/JSON/DOT reports over the
//! reflection-group pipeline.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use catoptron::chars::{CharacterTable, IrrLabel};
use catoptron::error::Error;
use catoptron::group::{Family, ReflectionGroup};
use catoptron::hovinen::match_swallowtail;
use catoptron::invariant::InvariantRing;
use catoptron::isotypic::{
    discriminant_ring_series, fake_degree, m_series, molien_isotypic, rank_report, rat_string,
};
use catoptron::matfact::{isotypic_blocks, mult_matrix, MatrixFactorization, Multiplier};
use catoptron::mckay::{mckay_quiver_sn, Partition};

#[derive(Parser)]
#[command(
    name = "catoptron",
    version,
    about = "Discriminants, matrix factorizations and McKay quivers of reflection groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Order, degrees, reflection counts and mirrors of a group.
    Group {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Jacobian, arrangement polynomial and discriminant.
    Discriminant {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ranks of the isotypical components over the discriminant.
    Ranks {
        #[arg(long)]
        group: String,
        /// Report per-component ranks (required when the discriminant is
        /// reducible, e.g. for the monomial family).
        #[arg(long)]
        per_component: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hilbert–Poincaré series of one isotypical component.
    Hilbert {
        #[arg(long)]
        group: String,
        /// Irreducible label: a partition like "3,1" for the symmetric
        /// families, or an exponent k (also "triv"/"det") for cyclic groups.
        #[arg(long)]
        label: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Multiplication matrices on the coinvariant basis and their blocks.
    Matfact {
        #[arg(long)]
        group: String,
        /// Lift the |G| <= 24 size guard.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// McKay quiver (combinatorial and character-based agree).
    Quiver {
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CmdError::Unsupported(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(CmdError::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

enum CmdError {
    Parse(String),
    Unsupported(String),
    Internal(String),
}

impl From<Error> for CmdError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter(m) => CmdError::Parse(m),
            Error::Unsupported(m) | Error::Precondition(m) => CmdError::Unsupported(m),
            other => CmdError::Internal(other.to_string()),
        }
    }
}

type CmdResult = std::result::Result<(), CmdError>;

fn emit(out: &Option<PathBuf>, content: &str) -> CmdResult {
    match out {
        Some(path) => std::fs::File::create(path)
            .and_then(|mut f| f.write_all(content.as_bytes()))
            .map_err(|e| CmdError::Internal(format!("cannot write output: {e}"))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn parse_family(desc: &str) -> Result<Family, CmdError> {
    Family::parse(desc).map_err(|e| CmdError::Parse(e.to_string()))
}

fn reject_dot(format: Format) -> CmdResult {
    if format == Format::Dot {
        Err(CmdError::Unsupported(
            "DOT output is only available for the quiver command".into(),
        ))
    } else {
        Ok(())
    }
}

fn run(cmd: Command) -> CmdResult {
    match cmd {
        Command::Group { group, format, out } => {
            reject_dot(format)?;
            let fam = parse_family(&group)?;
            let g = ReflectionGroup::build(fam)?;
            let content = match format {
                Format::Json => {
                    let mirror_forms: Vec<serde_json::Value> = (0..g.m1())
                        .map(|i| {
                            serde_json::json!({
                                "form": g.mirror_form_poly(i).to_string(),
                                "order": g.mirrors[i].order,
                            })
                        })
                        .collect();
                    pretty(&serde_json::json!({
                        "group": fam.to_string(),
                        "order": g.order(),
                        "degrees": g.degrees,
                        "reflections": g.m(),
                        "mirrors": g.m1(),
                        "mirror_forms": mirror_forms,
                    }))
                }
                _ => {
                    let mut s = String::new();
                    s.push_str(&format!("group: {fam}\n"));
                    s.push_str(&format!("|G| = {}\n", g.order()));
                    s.push_str(&format!("degrees = {:?}\n", g.degrees));
                    s.push_str(&format!("pseudo-reflections m = {}\n", g.m()));
                    s.push_str(&format!("mirrors m1 = {}\n", g.m1()));
                    for i in 0..g.m1() {
                        s.push_str(&format!(
                            "  mirror: {} (order {})\n",
                            g.mirror_form_poly(i),
                            g.mirrors[i].order
                        ));
                    }
                    s
                }
            };
            emit(&out, &content)
        }
        Command::Discriminant { group, format, out } => {
            reject_dot(format)?;
            let fam = parse_family(&group)?;
            let ring = InvariantRing::build(fam)?;
            let disc = ring.discriminant()?;
            let matched = match_swallowtail(&disc.delta);
            let content = match format {
                Format::Json => {
                    let mut obj = serde_json::json!({
                        "group": fam.to_string(),
                        "jacobian": disc.jacobian.to_json(),
                        "arrangement": disc.arrangement.to_json(),
                        "delta": disc.delta.to_json(),
                        "unit": disc.unit.to_string(),
                    });
                    if let Some(m) = &matched {
                        obj["swallowtail_match"] = serde_json::json!({
                            "alpha": rat_string(&m.alpha),
                            "beta_sq": rat_string(&m.beta_sq),
                            "gamma": rat_string(&m.gamma),
                            "delta_shift": rat_string(&m.delta_shift),
                            "scale": rat_string(&m.scale),
                        });
                    }
                    pretty(&obj)
                }
                _ => {
                    let mut s = String::new();
                    s.push_str(&format!("group: {fam}\n"));
                    s.push_str(&format!("J = {}\n", disc.jacobian));
                    s.push_str(&format!("z = {}\n", disc.arrangement));
                    s.push_str(&format!("delta = {}\n", disc.delta));
                    s.push_str(&format!("unit (leading coefficient) = {}\n", disc.unit));
                    match &matched {
                        Some(m) => s.push_str(&format!(
                            "swallowtail match: u -> alpha*u, v -> beta*v, w -> gamma*w + delta*u^2 \
                             with alpha = {}, beta^2 = {}, gamma = {}, delta = {}, scale = {}\n",
                            rat_string(&m.alpha),
                            rat_string(&m.beta_sq),
                            rat_string(&m.gamma),
                            rat_string(&m.delta_shift),
                            rat_string(&m.scale),
                        )),
                        None => {
                            if ring.u_ctx().weights() == [2, 3, 4] {
                                s.push_str("swallowtail match: none\n");
                            }
                        }
                    }
                    s
                }
            };
            emit(&out, &content)
        }
        Command::Ranks {
            group,
            per_component,
            format,
            out,
        } => {
            reject_dot(format)?;
            let fam = parse_family(&group)?;
            if !fam.delta_irreducible() && !per_component {
                return Err(CmdError::Unsupported(
                    "the discriminant of this family is reducible; pass --per-component".into(),
                ));
            }
            let g = ReflectionGroup::build(fam)?;
            let report = rank_report(&g)?;
            let content = match format {
                Format::Json => pretty(&report.to_json()),
                _ => {
                    let mut s = String::new();
                    s.push_str(&format!("group: {fam}\n"));
                    for (name, dim, rank) in &report.labels {
                        s.push_str(&format!(
                            "rank(M_{name}) = {} (dim {dim})\n",
                            rat_string(rank)
                        ));
                    }
                    if !report.labels.is_empty() {
                        s.push_str(&format!(
                            "sum dim * rank = {}\n",
                            rat_string(&report.sum_dim_rank)
                        ));
                    }
                    s.push_str(&format!("rank(Abar) = {}\n", rat_string(&report.rank_abar)));
                    for c in &report.components {
                        s.push_str(&format!(
                            "component: r = {}, orbit size = {}, rank = {}\n",
                            c.r,
                            c.orbit_size,
                            rat_string(&c.rank)
                        ));
                    }
                    s
                }
            };
            emit(&out, &content)
        }
        Command::Hilbert {
            group,
            label,
            format,
            out,
        } => {
            reject_dot(format)?;
            let fam = parse_family(&group)?;
            let g = ReflectionGroup::build(fam)?;
            let table =
                CharacterTable::for_group(&g).map_err(|e| CmdError::Unsupported(e.to_string()))?;
            let idx = parse_label(&table, &label, fam)?;
            let k = fake_degree(&g, &table, idx)?;
            let hs = molien_isotypic(&g, &table, idx)?;
            let hm = m_series(&g, &table, idx)?;
            let hq = discriminant_ring_series(&g);
            let content = match format {
                Format::Json => pretty(&serde_json::json!({
                    "group": fam.to_string(),
                    "label": table.labels[idx].to_string(),
                    "fake_degree": k.to_string(),
                    "series_s": hs.to_string(),
                    "series_m": hm.to_string(),
                    "series_r_mod_delta": hq.to_string(),
                })),
                _ => {
                    let mut s = String::new();
                    s.push_str(&format!("group: {fam}, label: {}\n", table.labels[idx]));
                    s.push_str(&format!("fake degree K(t) = {k}\n"));
                    s.push_str(&format!("H_S(t) = {hs}\n"));
                    s.push_str(&format!("H_M(t) = {hm}\n"));
                    s.push_str(&format!("H_R/(delta)(t) = {hq}\n"));
                    s
                }
            };
            emit(&out, &content)
        }
        Command::Matfact {
            group,
            force,
            format,
            out,
        } => {
            reject_dot(format)?;
            let fam = parse_family(&group)?;
            let ring = InvariantRing::build(fam)?;
            if ring.group().order() > 24 && !force {
                return Err(CmdError::Unsupported(format!(
                    "|G| = {} exceeds the default matfact guard of 24; pass --force",
                    ring.group().order()
                )));
            }
            let disc = ring.discriminant()?.clone();
            let mj = mult_matrix(&ring, Multiplier::Jacobian)?;
            let mz = mult_matrix(&ring, Multiplier::Arrangement)?;
            let mf = MatrixFactorization::new(mz.clone(), mj.clone(), disc.delta.clone());
            let verified = mf.verify()?;
            if !verified {
                return Err(CmdError::Internal(
                    "multiplication matrices do not factor the discriminant".into(),
                ));
            }
            let blocks = CharacterTable::for_group(ring.group())
                .ok()
                .map(|table| isotypic_blocks(&mj, &ring, &table, Multiplier::Jacobian))
                .transpose()?;
            let content = match format {
                Format::Json => {
                    let mut obj = mf.to_json();
                    obj["group"] = serde_json::json!(fam.to_string());
                    obj["unit"] = serde_json::json!(disc.unit.to_string());
                    if let Some(blocks) = &blocks {
                        obj["block_sizes"] = serde_json::json!(blocks
                            .iter()
                            .map(|b| b.block.rows())
                            .collect::<Vec<_>>());
                    }
                    pretty(&obj)
                }
                _ => {
                    let mut s = String::new();
                    s.push_str(&format!("group: {fam}\n"));
                    s.push_str(&format!("size: {} x {}\n", mj.rows(), mj.cols()));
                    s.push_str(&format!("delta = {}\n", disc.delta));
                    s.push_str(&format!("M_z * M_J = M_J * M_z = delta * I: {verified}\n"));
                    if let Some(blocks) = &blocks {
                        for b in blocks {
                            s.push_str(&format!(
                                "block {} -> {}: {} x {}\n",
                                b.source,
                                b.target,
                                b.block.rows(),
                                b.block.cols()
                            ));
                        }
                    }
                    s
                }
            };
            emit(&out, &content)
        }
        Command::Quiver { group, format, out } => {
            let fam = parse_family(&group)?;
            let quiver = match fam {
                Family::SymNatural(n) | Family::SymEssential(n) => mckay_quiver_sn(n)?,
                Family::Cyclic(d) => {
                    let table = CharacterTable::cyclic(d);
                    let chi_v = table.defining_character();
                    catoptron::chars::mckay_quiver_from_table(&table, &chi_v)?
                }
                Family::Monomial { .. } => {
                    return Err(CmdError::Unsupported(
                        "McKay quivers are available for the symmetric and cyclic families".into(),
                    ))
                }
            };
            let content = match format {
                Format::Dot => quiver.to_dot(),
                Format::Json => pretty(&quiver.to_json()),
                Format::Text => {
                    let mut s = String::new();
                    s.push_str(&format!("vertices: {}\n", quiver.vertices.join(" ")));
                    for (&(a, b), &m) in &quiver.arrows {
                        s.push_str(&format!(
                            "{} -> {} (x{m})\n",
                            quiver.vertices[a], quiver.vertices[b]
                        ));
                    }
                    for (&v, &m) in &quiver.loops {
                        s.push_str(&format!("loop at {} (x{m})\n", quiver.vertices[v]));
                    }
                    s
                }
            };
            emit(&out, &content)
        }
    }
}

fn parse_label(table: &CharacterTable, label: &str, fam: Family) -> Result<usize, CmdError> {
    let not_found = |l: &str| CmdError::Parse(format!("unknown label '{l}' for {fam}"));
    match fam {
        Family::Cyclic(d) => {
            let k = match label {
                "triv" => 0,
                "det" => 1,
                other => other.parse::<u32>().map_err(|_| not_found(label))? % d,
            };
            table
                .label_index(&IrrLabel::Power(k))
                .ok_or_else(|| not_found(label))
        }
        _ => {
            let parts: Result<Vec<u32>, _> = label
                .split(',')
                .map(|p| p.trim().parse::<u32>())
                .collect();
            let parts = parts.map_err(|_| not_found(label))?;
            let p = Partition::new(parts);
            table
                .label_index(&IrrLabel::Partition(p))
                .ok_or_else(|| not_found(label))
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
