use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use resdeg::data::{load_records, parse_factors, parse_records};
use resdeg::{examples, sweep, table};
use resdeg_core::arith::divisors;
use resdeg_core::aut::{aut_order, for_each_automorphism, DEFAULT_CEILING};
use resdeg_core::consequences::{
    a1_impossible, degree6_exponent_bound, ell_torsion_rank_bound, hilbert_never_cyclic, real_plus_part_structure,
    subfield_exponent_bound, theta_f, BoundReport,
};
use resdeg_core::criteria::{
    certify_all, check_cmain, check_gmain, check_main, check_t41, check_t45, check_two_power_counting, ClassData,
    FieldDescriptor, GaloisShape, RCertificate,
};
use resdeg_core::cyclo::density_table;
use resdeg_core::group::describe;
use resdeg_core::sim::{for_each_action, ActionFilter};
use resdeg_core::FiniteAbelianGroup;

const EXIT_USAGE: u8 = 1;
const EXIT_DATA: u8 = 2;
const EXIT_GOLDEN: u8 = 3;
const EXIT_NOTHING_CERTIFIED: u8 = 4;

#[derive(Parser)]
#[command(name = "resdeg", version, about = "Residue degrees whose primes generate class groups of cyclic fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce the real cyclotomic table from class-number records.
    Table {
        /// CSV with header `ell,h[,factors][,source]`; the bundled table when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Emit JSON lines with full certificates instead of TSV.
        #[arg(long)]
        json: bool,
        /// Compare the TSV output byte for byte against this file.
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Run the worked examples and compare against their asserted memberships.
    Examples {
        #[arg(long)]
        json: bool,
        /// Compare the TSV summary byte for byte against this file.
        #[arg(long)]
        check: Option<PathBuf>,
    },
    /// Certify residue degrees for a field of degree n.
    Certify {
        #[arg(long)]
        n: u64,
        /// Class number, when the class group itself is unknown.
        #[arg(long, conflicts_with = "cl")]
        h: Option<u64>,
        /// Exact class group, e.g. `2x2`.
        #[arg(long)]
        cl: Option<String>,
        /// `cyclic`, `elem2:<t>`, `ppow:<q>,<t>` or `abelian:<factors>`.
        #[arg(long, default_value = "cyclic")]
        shape: String,
        #[arg(long, conflicts_with = "all")]
        f: Option<u64>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: u64,
    },
    /// Enumerate actions of G on A and report generation by degree-f classes.
    Simulate {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "G")]
        g: String,
        #[arg(long)]
        f: Option<u64>,
        /// One TSV line per action; otherwise a per-f summary.
        #[arg(long)]
        list_actions: bool,
        /// Include actions whose norm does not vanish.
        #[arg(long)]
        all_actions: bool,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: u64,
    },
    /// Empirical residue-degree densities in Q(zeta_ell) or its real subfield.
    Density {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        plus: bool,
        #[arg(long)]
        f: Option<u64>,
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
    },
    /// Order of the automorphism group of an abelian group.
    AutOrder {
        /// Cyclic orders, e.g. `2x4`.
        factors: String,
        /// Also count automorphisms by enumeration.
        #[arg(long)]
        verify: bool,
        #[arg(long, default_value_t = DEFAULT_CEILING)]
        ceiling: u64,
    },
    /// The annihilator theta_f of G.
    Annihilator {
        #[arg(long = "G")]
        g: String,
        #[arg(long)]
        f: u64,
    },
    /// Derived bounds, as JSON.
    Bound {
        #[command(subcommand)]
        which: BoundCommand,
    },
    /// Exhaustive cross-checks, as JSON lines.
    Sweep {
        #[command(subcommand)]
        which: SweepCommand,
    },
}

#[derive(Subcommand)]
enum BoundCommand {
    /// No cyclic degree-n field has cyclic class group of order m.
    A1 {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        m: u64,
    },
    /// Degree-6 cyclic field: exponent bound for the cubic subfield.
    A2 {
        #[arg(long)]
        h: Option<u64>,
        #[arg(long)]
        cl: Option<String>,
    },
    /// Exponent bound for the degree-f subfield of Q(zeta_ell).
    A3 {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        f: u64,
        #[arg(long)]
        h: Option<u64>,
        #[arg(long)]
        cl: Option<String>,
    },
    /// Hilbert class field of a cyclic degree-n field is never cyclic over Q.
    A4 {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        h: u64,
    },
    /// ell-rank lower bound for cyclic degree-n fields.
    A11 {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        ell: u64,
    },
    /// Structure of the plus part of Q(zeta_ell).
    Plus {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        h_plus: u64,
        #[arg(long)]
        h_minus: u64,
    },
}

#[derive(Subcommand)]
enum SweepCommand {
    /// Order formula in split extensions, |A|*|G| <= max.
    Spl {
        #[arg(long, default_value_t = 400)]
        max: u64,
        #[arg(long, default_value_t = 2_000_000)]
        ceiling: u64,
    },
    /// Criteria against the simulator, |A| <= max-a, n <= max-n.
    Soundness {
        #[arg(long, default_value_t = 40)]
        max_a: u64,
        #[arg(long, default_value_t = 30)]
        max_n: u64,
        #[arg(long, default_value_t = 20_000_000)]
        ceiling: u64,
    },
    /// Closed-form impossibility against the simulator, n*m <= max.
    A1 {
        #[arg(long, default_value_t = 400)]
        max: u64,
    },
}

/// Distinguishes bad input data from other failures.
#[derive(Debug)]
struct DataFailure(String);

impl std::fmt::Display for DataFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for DataFailure {}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<DataFailure>().is_some() {
                ExitCode::from(EXIT_DATA)
            } else {
                ExitCode::from(EXIT_USAGE)
            }
        }
    }
}

fn group(s: &str) -> Result<FiniteAbelianGroup> {
    let f = parse_factors(s).map_err(|e| anyhow!(e))?;
    Ok(FiniteAbelianGroup::new(&f)?)
}

fn class_data(h: Option<u64>, cl: Option<&str>) -> Result<ClassData> {
    match (h, cl) {
        (_, Some(cl)) => Ok(ClassData::Group(group(cl)?)),
        (Some(h), None) => Ok(ClassData::Number(h)),
        (None, None) => bail!("one of --h or --cl is required"),
    }
}

fn parse_shape(s: &str, n: u64) -> Result<GaloisShape> {
    let (kind, arg) = s.split_once(':').unwrap_or((s, ""));
    let num = |x: &str| x.trim().parse::<u64>().with_context(|| format!("bad number `{x}` in shape `{s}`"));
    Ok(match kind {
        "cyclic" => GaloisShape::Cyclic,
        "elem2" => GaloisShape::Elem2(num(arg)? as u32),
        "ppow" => {
            let (q, t) = arg.split_once(',').ok_or_else(|| anyhow!("ppow shape needs `q,t`"))?;
            GaloisShape::PrimePower { q: num(q)?, t: num(t)? as u32 }
        }
        "abelian" => GaloisShape::Abelian(parse_factors(arg).map_err(|e| anyhow!(e))?),
        _ => bail!("unknown shape `{s}` for degree {n}"),
    })
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

fn compare_golden(actual: &str, path: &PathBuf) -> Result<bool> {
    let expected =
        std::fs::read_to_string(path).map_err(|e| DataFailure(format!("{}: {e}", path.display())))?;
    if expected == actual {
        return Ok(true);
    }
    for (i, (a, b)) in actual.lines().zip(expected.lines()).enumerate() {
        if a != b {
            eprintln!("golden mismatch at line {}:\n  expected: {b}\n  actual:   {a}", i + 1);
            return Ok(false);
        }
    }
    eprintln!(
        "golden mismatch: {} lines produced, {} expected",
        actual.lines().count(),
        expected.lines().count()
    );
    Ok(false)
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Table { input, json, check } => {
            let records = match input {
                Some(p) => load_records(&p),
                None => parse_records(examples::REAL_PLUS_TABLE_CSV),
            }
            .map_err(|e| DataFailure(e.to_string()))?;
            let mut rows = Vec::new();
            for r in table::reproduce_table(&records) {
                match r {
                    Ok(row) => rows.push(row),
                    Err(e) => eprintln!("row {}: {}", e.ell, e.message),
                }
            }
            let tsv = table::to_tsv(&rows.iter().map(table::TableRow::summary).collect::<Vec<_>>());
            if json {
                print!("{}", table::to_json_lines(&rows)?);
            } else {
                print!("{tsv}");
            }
            if let Some(path) = check {
                if !compare_golden(&tsv, &path)? {
                    return Ok(ExitCode::from(EXIT_GOLDEN));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Examples { json, check } => {
            let outcomes = examples::run_bundled().map_err(|e| DataFailure(e.to_string()))?;
            if json {
                for o in &outcomes {
                    print_json(o)?;
                }
            } else {
                print!("{}", examples::report(&outcomes));
            }
            let mut ok = outcomes.iter().all(examples::ExampleOutcome::passed);
            if let Some(path) = check {
                ok &= compare_golden(&examples::to_tsv(&outcomes), &path)?;
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(EXIT_GOLDEN) })
        }
        Command::Certify { n, h, cl, shape, f, all: _, ceiling } => {
            let class = class_data(h, cl.as_deref())?;
            let field = FieldDescriptor::new(format!("degree {n}"), n, parse_shape(&shape, n)?, class)?;
            let certs: Vec<RCertificate> = match f {
                None => certify_all(&field, ceiling)?,
                Some(f) => certify_at(&field, f, ceiling)?,
            };
            for c in &certs {
                print_json(c)?;
            }
            let any = certs.iter().any(|c| !c.nontrivial().is_empty());
            Ok(if any { ExitCode::SUCCESS } else { ExitCode::from(EXIT_NOTHING_CERTIFIED) })
        }
        Command::Simulate { a, g, f, list_actions, all_actions, ceiling } => {
            let (a, g) = (group(&a)?, group(&g)?);
            let fs = match f {
                Some(f) => vec![f],
                None => divisors(g.exponent()),
            };
            simulate(&a, &g, &fs, list_actions, all_actions, ceiling)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Density { ell, plus, f, bound } => {
            let rows = density_table(ell, plus, bound)?;
            println!("ell\tplus\tf\tcount\ttotal\tobserved\tpredicted\tsigma");
            for r in rows.iter().filter(|r| f.is_none_or(|f| r.f == f)) {
                println!(
                    "{}\t{}\t{}\t{}\t{}\t{:.6}\t{:.6}\t{:.3}",
                    r.ell, r.plus, r.f, r.count, r.total, r.observed, r.predicted, r.sigma_distance
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::AutOrder { factors, verify, ceiling } => {
            let g = group(&factors)?;
            let order = aut_order(&g);
            println!("{}\t{order}", describe(&g));
            if verify {
                if order > ceiling.into() {
                    bail!("predicted order {order} exceeds the enumeration ceiling {ceiling}");
                }
                let mut count = 0u64;
                let _ = for_each_automorphism(&g, |_| {
                    count += 1;
                    std::ops::ControlFlow::Continue(())
                });
                println!("enumerated\t{count}\t{}", if order == count.into() { "agree" } else { "DISAGREE" });
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Annihilator { g, f } => {
            let theta = theta_f(&group(&g)?, f)?;
            println!("{theta}");
            for x in theta.support() {
                println!("{x}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bound { which } => {
            print_json(&bound(which)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep { which } => {
            match which {
                SweepCommand::Spl { max, ceiling } => {
                    for p in sweep::spl_sweep(max, ceiling)?.pairs {
                        print_json(&p)?;
                    }
                }
                SweepCommand::Soundness { max_a, max_n, ceiling } => {
                    for c in sweep::soundness_sweep(max_a, max_n, ceiling)? {
                        print_json(&c)?;
                    }
                }
                SweepCommand::A1 { max } => {
                    for c in sweep::a1_sweep(max, DEFAULT_CEILING)? {
                        print_json(&c)?;
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn certify_at(field: &FieldDescriptor, f: u64, ceiling: u64) -> Result<Vec<RCertificate>> {
    let mut out = Vec::new();
    if field.is_cyclic() {
        out.push(check_main(field, f, ceiling)?);
        out.push(check_cmain(field, f)?);
        if field.class_groups().len() == 1 {
            out.push(check_gmain(field, f, ceiling)?);
        }
        return Ok(out);
    }
    match field.shape {
        GaloisShape::PrimePower { q, .. } => out.push(check_t41(field, q)?),
        GaloisShape::Elem2(_) => out.push(check_t45(field)?),
        _ => out.push(check_two_power_counting(field, ceiling)?),
    }
    Ok(out)
}

fn simulate(
    a: &FiniteAbelianGroup,
    g: &FiniteAbelianGroup,
    fs: &[u64],
    list: bool,
    all: bool,
    ceiling: u64,
) -> Result<()> {
    let filter = if all { ActionFilter::All } else { ActionFilter::Valid };
    let mut count = 0u64;
    let mut generated = vec![0u64; fs.len()];
    if list {
        let cols: Vec<String> = fs.iter().map(|f| format!("f={f}")).collect();
        println!("action\tvalid\tgenerator_images\t{}", cols.join("\t"));
    }
    for_each_action(a, g, filter, ceiling, |ext| {
        count += 1;
        let verdicts: Vec<bool> = fs.iter().map(|&f| ext.generated_by_degree(f)).collect();
        for (n, &v) in generated.iter_mut().zip(&verdicts) {
            *n += u64::from(v);
        }
        if list {
            let hom = ext.action_hom();
            let images: Vec<String> = hom
                .images()
                .iter()
                .map(|alpha| alpha.images().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                .collect();
            let cells: Vec<&str> = verdicts.iter().map(|&v| if v { "generated" } else { "proper" }).collect();
            println!("{count}\t{}\t{}\t{}", ext.norm_is_zero(), images.join("; "), cells.join("\t"));
        }
        std::ops::ControlFlow::Continue(())
    })?;
    if !list {
        println!("f\tactions\tgenerated\tin_R");
        for (&f, &n) in fs.iter().zip(&generated) {
            println!("{f}\t{count}\t{n}\t{}", n == count);
        }
    }
    Ok(())
}

fn bound(which: BoundCommand) -> Result<BoundReport> {
    Ok(match which {
        BoundCommand::A1 { n, m } => a1_impossible(n, m)?,
        BoundCommand::A2 { h, cl } => degree6_exponent_bound(&class_data(h, cl.as_deref())?),
        BoundCommand::A3 { ell, f, h, cl } => subfield_exponent_bound(ell, f, &class_data(h, cl.as_deref())?)?,
        BoundCommand::A4 { n, h } => hilbert_never_cyclic(n, h, DEFAULT_CEILING)?,
        BoundCommand::A11 { n, ell } => ell_torsion_rank_bound(n, ell)?,
        BoundCommand::Plus { ell, h_plus, h_minus } => real_plus_part_structure(ell, h_plus, h_minus)?,
    })
}
