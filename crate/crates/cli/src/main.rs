//! `hopf`: batch front end for building, verifying and classifying
//! bicrossed products.

mod commands;
mod io;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use bicrossed::FieldSpec;
use clap::{Parser, Subcommand};

use crate::io::{parse_field, parse_group};
use crate::report::{CliError, CliResult, Report};

#[derive(Parser, Debug)]
#[command(name = "hopf", version, about = "Exact computations with bicrossed products of Hopf algebras")]
struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Add the generation time to the report.
    #[arg(long, global = true)]
    timestamps: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every Hopf algebra axiom of a hopf-v1 file.
    Verify { file: PathBuf },
    /// Construct a Hopf algebra.
    Build {
        #[command(subcommand)]
        what: Build,
    },
    /// Check a matched pair file and build its bicrossed product.
    Bicrossed {
        pair: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Drinfel'd double of a group algebra or of a Hopf algebra file.
    Double {
        #[command(subcommand)]
        what: Double,
    },
    /// Recover the matched pair of a factorization E = A H.
    Factorize {
        e: PathBuf,
        /// {dom: hopf-v1, matrix} for the embedding of A.
        #[arg(long)]
        a_image: PathBuf,
        /// {dom: hopf-v1, matrix} for the embedding of H.
        #[arg(long)]
        h_image: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hopf maps between two bicrossed products, given as matched pair files.
    Morphisms {
        source: PathBuf,
        target: PathBuf,
        /// Keep only maps that fix A.
        #[arg(long)]
        stabilize_a: bool,
        /// Keep only bijective maps.
        #[arg(long)]
        isomorphisms: bool,
    },
    /// The group of unitary cocentral maps H -> A under convolution.
    Coz1 { h: PathBuf, a: PathBuf },
    /// Classification of the quantum groups H_{4n}.
    Classify {
        #[command(subcommand)]
        what: Classify,
    },
    /// Automorphism groups.
    Aut {
        #[command(subcommand)]
        what: Aut,
    },
    /// All matched pairs (H4, k[C2 x C2]) and their products.
    Klein {
        #[arg(long, value_parser = parse_field_arg)]
        field: FieldSpec,
    },
    /// Write a fixture in hopf-v1 format and re-verify the written file.
    Export {
        #[command(subcommand)]
        fixture: Fixture,
    },
    /// Check data describing a map between Drinfel'd doubles of groups.
    DoubleHom {
        #[arg(long)]
        group: String,
        /// Target group; defaults to the source group.
        #[arg(long)]
        target: Option<String>,
        #[arg(long, value_parser = parse_field_arg)]
        field: FieldSpec,
        /// {lambda, omega, theta, v}; the identity data when omitted.
        #[arg(long)]
        data: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Build {
    /// H_{4n, xi^t}.
    H4n {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        t: u64,
        #[arg(long, value_parser = parse_field_arg)]
        field: FieldSpec,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the matched pair (H4, k[Cn]) it is built from.
        #[arg(long)]
        pair_out: Option<PathBuf>,
    },
    /// Tensor product of two Hopf algebra files.
    Tensor {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dual Hopf algebra.
    Dual {
        h: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Group algebra of `cyclic:N`, `klein`, `s3` or a group table file.
    Group {
        group: String,
        #[arg(long, value_parser = parse_field_arg)]
        field: FieldSpec,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Double {
    Group {
        group: String,
        #[arg(long, value_parser = parse_field_arg)]
        field: FieldSpec,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the matched pair.
        #[arg(long)]
        pair_out: Option<PathBuf>,
    },
    Hopf {
        h: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        pair_out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Classify {
    /// Isomorphism classes of H_{4n, w} for all roots w.
    H4n {
        #[arg(long)]
        n: u64,
        #[arg(long, value_parser = parse_field_arg)]
        field: FieldSpec,
    },
    /// Search for all matched pairs (H4, k[Cn]).
    Pairs {
        #[arg(long)]
        n: u64,
        #[arg(long, value_parser = parse_field_arg)]
        field: FieldSpec,
    },
    /// Decide whether H_{4n, xi^l} and H_{4n, xi^t} are isomorphic.
    Iso {
        #[arg(long)]
        l: u64,
        #[arg(long)]
        t: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_parser = parse_field_arg)]
        field: FieldSpec,
        /// Also search all Hopf maps and compare.
        #[arg(long)]
        brute: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Aut {
    H4n {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u64,
        #[arg(long, value_parser = parse_field_arg)]
        field: FieldSpec,
        /// Also count the automorphisms by search.
        #[arg(long)]
        brute: bool,
    },
}

#[derive(Subcommand, Debug)]
enum Fixture {
    H4 {
        #[arg(long, value_parser = parse_field_arg)]
        field: FieldSpec,
        #[arg(long)]
        out: PathBuf,
    },
    H4n {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        t: u64,
        #[arg(long, value_parser = parse_field_arg)]
        field: FieldSpec,
        #[arg(long)]
        out: PathBuf,
    },
    DoubleGroup {
        #[arg(long)]
        group: String,
        #[arg(long, value_parser = parse_field_arg)]
        field: FieldSpec,
        #[arg(long)]
        out: PathBuf,
    },
    /// Bicrossed product H4 ⋈ k[C2 x C2]; pair 0 is the tensor product.
    Klein {
        #[arg(long, value_parser = parse_field_arg)]
        field: FieldSpec,
        #[arg(long, default_value_t = 0)]
        pair: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_field_arg(s: &str) -> Result<FieldSpec, String> {
    parse_field(s).map_err(|e| match e {
        CliError::Usage(m) | CliError::Verification(m) => m,
    })
}

fn run(cmd: Command) -> CliResult<Report> {
    use commands as c;
    match cmd {
        Command::Verify { file } => c::verify(&file),
        Command::Build { what } => match what {
            Build::H4n { n, t, field, out, pair_out } => {
                c::build_h4n_cmd(n, t, field, out.as_deref(), pair_out.as_deref())
            }
            Build::Tensor { a, b, out } => c::build_tensor(&a, &b, out.as_deref()),
            Build::Dual { h, out } => c::build_dual(&h, out.as_deref()),
            Build::Group { group, field, out } => c::build_group(&parse_group(&group)?, field, out.as_deref()),
        },
        Command::Bicrossed { pair, out } => c::bicrossed(&pair, out.as_deref()),
        Command::Double { what } => match what {
            Double::Group { group, field, out, pair_out } => {
                c::double_group(&parse_group(&group)?, field, out.as_deref(), pair_out.as_deref())
            }
            Double::Hopf { h, out, pair_out } => c::double_hopf(&h, out.as_deref(), pair_out.as_deref()),
        },
        Command::Factorize { e, a_image, h_image, out } => c::factorize_cmd(&e, &a_image, &h_image, out.as_deref()),
        Command::Morphisms { source, target, stabilize_a, isomorphisms } => {
            c::morphisms(&source, &target, stabilize_a, isomorphisms)
        }
        Command::Coz1 { h, a } => c::coz1(&h, &a),
        Command::Classify { what } => match what {
            Classify::H4n { n, field } => c::classify_h4n(n, field),
            Classify::Pairs { n, field } => c::classify_pairs(n, field),
            Classify::Iso { l, t, n, field, brute } => c::classify_iso(l, t, n, field, brute),
        },
        Command::Aut { what } => match what {
            Aut::H4n { n, t, field, brute } => c::aut_h4n(n, t, field, brute),
        },
        Command::Klein { field } => c::klein(field),
        Command::Export { fixture } => match fixture {
            Fixture::H4 { field, out } => c::export_h4(field, &out),
            Fixture::H4n { n, t, field, out } => c::export_h4n(n, t, field, &out),
            Fixture::DoubleGroup { group, field, out } => c::export_double_group(&parse_group(&group)?, field, &out),
            Fixture::Klein { field, pair, out } => c::export_klein(pair, field, &out),
        },
        Command::DoubleHom { group, target, field, data } => {
            let g = parse_group(&group)?;
            let h = match target {
                Some(t) => parse_group(&t)?,
                None => g.clone(),
            };
            c::double_hom(&g, &h, field, data.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let timestamp = cli
        .timestamps
        .then(|| SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0));
    match run(cli.command) {
        Ok(rep) => {
            print!("{}", rep.render(cli.json, timestamp));
            match &rep.failure {
                None => ExitCode::SUCCESS,
                Some(f) => {
                    eprintln!("verification failed: {f}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
