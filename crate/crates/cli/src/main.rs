use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Signed;

use besse::classify::{classify_positive_chi, classify_zero_chi, negative_chi_family};
use besse::morse_bott::{e1_page, orbit_spectrum, sh_ranks};
use besse::seifert::{ade_link, ellipsoid, parse_seifert};
use besse::{AdeType, Error, SeifertData};

mod report;

use report::Render;

#[derive(Parser, Debug)]
#[command(name = "besse", version, about = "Invariants of Besse contact 3-manifolds from Seifert data")]
struct Cli {
    /// Reverse the orientation of DATA before computing.
    #[arg(long, global = true)]
    reverse_orientation: bool,

    /// Emit a single JSON document.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Euler number, orbifold Euler characteristic, c1 and H1.
    Invariants { data: String },
    /// Integral and mod-2 homology.
    Homology { data: String },
    /// Both c1 triviality tests and the trivialization corrections.
    Chern { data: String },
    /// Enumerate c1 = 0 data.
    Classify {
        #[arg(long, value_enum)]
        chi: ChiClass,
        #[arg(long, default_value_t = 5)]
        max_alpha: i64,
        #[arg(long, default_value_t = 3)]
        max_b: i64,
        /// Genus for --chi neg-family.
        #[arg(long, default_value_t = 2)]
        genus: i64,
        /// Comma-separated multiplicities for --chi neg-family.
        #[arg(long, value_delimiter = ',')]
        alphas: Vec<i64>,
    },
    /// Robbin-Salamon indices and gradings of closed Reeb orbits.
    Indices {
        data: String,
        #[arg(long, default_value_t = 3)]
        max_period: u64,
    },
    /// E1 page of the Morse-Bott spectral sequence.
    E1 {
        data: String,
        /// Largest filtration level; defaults to 3 lcm(α).
        #[arg(long)]
        pmax: Option<i64>,
        /// Text chart, p to the right and q upward.
        #[arg(long, conflicts_with = "json")]
        grid: bool,
    },
    /// Positive symplectic homology ranks of a lacunary E1 page.
    Sh {
        data: String,
        #[arg(long)]
        pmax: Option<i64>,
    },
    /// Seifert data of the link of a simple singularity.
    Ade { ty: String },
    /// Seifert data of the ellipsoid E(a, b).
    Ellipsoid { a: i64, b: i64 },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ChiClass {
    Pos,
    Zero,
    NegFamily,
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn data(cli: &Cli, text: &str) -> Result<SeifertData, Failure> {
    let d = parse_seifert(text).map_err(|e| Failure::Usage(format!("{text}: {e}")))?;
    let d = if cli.reverse_orientation { d.reverse_orientation() } else { d };
    warn_negative(&d);
    Ok(d)
}

fn warn_negative(d: &SeifertData) {
    let e = d.euler_number();
    if e.is_negative() {
        eprintln!("warning: e = {e} < 0; --reverse-orientation gives e > 0");
    }
}

fn default_pmax(d: &SeifertData, pmax: Option<i64>) -> i64 {
    pmax.unwrap_or_else(|| 3 * d.normalize().lcm_alpha())
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Invariants { data: text } => {
            let d = data(cli, text)?;
            Ok(report::invariants(&d)?.render(json))
        }
        Command::Homology { data: text } => {
            let d = data(cli, text)?;
            Ok(report::homology(&d).render(json))
        }
        Command::Chern { data: text } => {
            let d = data(cli, text)?;
            Ok(report::chern(&d)?.render(json))
        }
        Command::Classify { chi, max_alpha, max_b, genus, alphas } => {
            let results = match chi {
                ChiClass::Pos => classify_positive_chi(*max_alpha),
                ChiClass::Zero => classify_zero_chi(*max_b),
                ChiClass::NegFamily => negative_chi_family(*genus, alphas).map(|r| vec![r]),
            }
            .map_err(|e| match e {
                Error::Precondition(_) | Error::NegativeGenus(_) => Failure::Usage(e.to_string()),
                e => Failure::Domain(e),
            })?;
            Ok(report::classification(&results).render(json))
        }
        Command::Indices { data: text, max_period } => {
            let d = data(cli, text)?;
            Ok(report::indices(&d, *max_period)?.render(json))
        }
        Command::E1 { data: text, pmax, grid } => {
            let d = data(cli, text)?;
            let p_max = default_pmax(&d, *pmax);
            let page = e1_page(&d, p_max)?;
            if *grid {
                return Ok(page.render_grid());
            }
            let strata = orbit_spectrum(&d, p_max)?;
            Ok(report::e1(&page, &strata).render(json))
        }
        Command::Sh { data: text, pmax } => {
            let d = data(cli, text)?;
            let page = e1_page(&d, default_pmax(&d, *pmax))?;
            Ok(report::sh(&sh_ranks(&page)?, &page).render(json))
        }
        Command::Ade { ty } => {
            let t: AdeType = ty.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let mut d = ade_link(t)?;
            if cli.reverse_orientation {
                d = d.reverse_orientation();
            }
            warn_negative(&d);
            Ok(report::ade(t, &d).render(json))
        }
        Command::Ellipsoid { a, b } => {
            let e = ellipsoid(*a, *b).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(report::ellipsoid(&e).render(json))
        }
    }
}
