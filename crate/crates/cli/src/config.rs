use std::fmt;
use std::path::PathBuf;

use ltype::bessel::min_truncation;
use ltype::exact::{format_rational, int, parse_rational};
use ltype::exec::Execution;
use ltype::Rational;
use serde::Serialize;

use crate::CliError;

pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Laguerre,
    Jacobi,
    Bessel,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Laguerre, Family::Jacobi, Family::Bessel];

    pub fn name(self) -> &'static str {
        match self {
            Family::Laguerre => "laguerre",
            Family::Jacobi => "jacobi",
            Family::Bessel => "bessel",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Equiv,
    Eigen,
    Symmetry,
    Gram,
    Identities,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Equiv, Suite::Eigen, Suite::Symmetry, Suite::Gram, Suite::Identities];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Equiv => "equiv",
            Suite::Eigen => "eigen",
            Suite::Symmetry => "symmetry",
            Suite::Gram => "gram",
            Suite::Identities => "identities",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Adds `x^power` to the Koekoek coefficient `d_order^alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Mutation {
    pub alpha: u32,
    pub order: usize,
    pub power: usize,
}

impl std::str::FromStr for Mutation {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || format!("expected ALPHA:ORDER:POWER, got {s:?}");
        let [a, i, j] = parts.as_slice() else {
            return Err(bad());
        };
        Ok(Mutation {
            alpha: a.parse().map_err(|_| bad())?,
            order: i.parse().map_err(|_| bad())?,
            power: j.parse().map_err(|_| bad())?,
        })
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.alpha, self.order, self.power)
    }
}

pub fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Grid selection shared by every verify subcommand.
#[derive(Debug, Clone, Default, clap::Args)]
pub struct GridArgs {
    /// Restrict to one family.
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Single alpha value.
    #[arg(long)]
    pub alpha: Option<u32>,
    /// Largest alpha of the default range.
    #[arg(long)]
    pub alpha_max: Option<u32>,
    /// Jacobi beta as "p" or "p/q".
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    pub beta: Option<Rational>,
    /// Point mass N (Laguerre, Jacobi) or M (Bessel).
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    pub mass: Option<Rational>,
    /// Squared eigenparameter of the Bessel-type functions.
    #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
    pub lambda2: Option<Rational>,
    /// Largest polynomial degree.
    #[arg(long, alias = "nmax")]
    pub n_max: Option<u32>,
    /// Exact even terms K of the Bessel-type series.
    #[arg(long)]
    pub truncation: Option<i64>,
    /// Seed for the random symmetry cases.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Record wall-clock time per case (makes the report nondeterministic).
    #[arg(long)]
    pub timing: bool,
    /// Run every case on the calling thread.
    #[arg(long)]
    pub sequential: bool,
    #[arg(long, hide = true)]
    pub mutate_koekoek: Option<Mutation>,
}

/// Validated run configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub suites: Vec<Suite>,
    pub families: Vec<Family>,
    pub alpha: Option<u32>,
    pub alpha_max: Option<u32>,
    pub beta: Option<Rational>,
    pub mass: Option<Rational>,
    pub lambda2: Option<Rational>,
    pub n_max: Option<u32>,
    pub truncation: Option<i64>,
    pub seed: u64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub timing: bool,
    pub execution: Execution,
    pub mutation: Option<Mutation>,
}

/// Echo of the configuration as written into the report.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub suites: Vec<Suite>,
    pub families: Vec<Family>,
    pub alpha: Option<u32>,
    pub alpha_max: Option<u32>,
    pub beta: Option<String>,
    pub mass: Option<String>,
    pub lambda2: Option<String>,
    pub n_max: Option<u32>,
    pub truncation: Option<i64>,
    pub mutation: Option<String>,
}

impl Config {
    pub fn new(suites: Vec<Suite>, args: GridArgs) -> Result<Config, CliError> {
        let config = Config {
            suites,
            families: args.family.map_or_else(|| Family::ALL.to_vec(), |f| vec![f]),
            alpha: args.alpha,
            alpha_max: args.alpha_max,
            beta: args.beta,
            mass: args.mass,
            lambda2: args.lambda2,
            n_max: args.n_max,
            truncation: args.truncation,
            seed: args.seed,
            format: args.format,
            out: args.out,
            timing: args.timing,
            execution: if args.sequential { Execution::Sequential } else { Execution::Parallel },
            mutation: args.mutate_koekoek,
        };
        config.validate()?;
        Ok(config)
    }

    /// Defaults for the given suites over every family.
    pub fn defaults(suites: Vec<Suite>) -> Config {
        Config::new(suites, GridArgs { seed: DEFAULT_SEED, ..GridArgs::default() }).expect("defaults are valid")
    }

    fn validate(&self) -> Result<(), CliError> {
        let err = |m: String| Err(CliError::Config(m));
        if let (Some(a), Some(m)) = (self.alpha, self.alpha_max) {
            if a > m {
                return err(format!("--alpha {a} exceeds --alpha-max {m}"));
            }
        }
        if let Some(b) = &self.beta {
            if *b <= int(-1) {
                return err(format!("--beta {b} must exceed -1"));
            }
        }
        for (name, v) in [("--mass", &self.mass), ("--lambda2", &self.lambda2)] {
            if let Some(v) = v {
                if *v < int(0) {
                    return err(format!("{name} {v} must be nonnegative"));
                }
            }
        }
        if let Some(k) = self.truncation {
            if self.families.contains(&Family::Bessel) {
                let top = self.alpha_range(Family::Bessel, Suite::Eigen).max().unwrap_or(0);
                let min = min_truncation(top);
                if k < min {
                    return err(format!("--truncation {k} is below {min}, the minimum for alpha = {top}"));
                }
            }
        }
        if let Some(m) = &self.mutation {
            let top = 2 * m.alpha as usize + 4;
            if m.order == 0 || m.order > top || m.power > m.alpha as usize + 2 {
                return err(format!("--mutate-koekoek {m}: order must be in 1..={top}, power at most {}", m.alpha + 2));
            }
        }
        Ok(())
    }

    pub fn echo(&self) -> ConfigEcho {
        let r = |v: &Option<Rational>| v.as_ref().map(format_rational);
        ConfigEcho {
            suites: self.suites.clone(),
            families: self.families.clone(),
            alpha: self.alpha,
            alpha_max: self.alpha_max,
            beta: r(&self.beta),
            mass: r(&self.mass),
            lambda2: r(&self.lambda2),
            n_max: self.n_max,
            truncation: self.truncation,
            mutation: self.mutation.map(|m| m.to_string()),
        }
    }

    /// Alpha values for one family and suite: `--alpha` wins, then
    /// `--alpha-max`, then the built-in default range.
    pub fn alpha_range(&self, family: Family, suite: Suite) -> std::ops::RangeInclusive<u32> {
        if let Some(a) = self.alpha {
            return a..=a;
        }
        let default = match (family, suite) {
            (Family::Laguerre, Suite::Equiv) => 6,
            (Family::Laguerre, Suite::Identities) => 5,
            (Family::Laguerre, Suite::Gram) => 3,
            (Family::Laguerre, _) => 4,
            (Family::Jacobi, _) => 4,
            (Family::Bessel, Suite::Eigen) => 3,
            (Family::Bessel, _) => 6,
        };
        0..=self.alpha_max.unwrap_or(default)
    }

    pub fn n_max_or(&self, default: u32) -> u32 {
        self.n_max.unwrap_or(default)
    }

    pub fn masses_or(&self, default: &[Rational]) -> Vec<Rational> {
        self.mass.clone().map_or_else(|| default.to_vec(), |m| vec![m])
    }

    pub fn betas_or(&self, default: &[Rational]) -> Vec<Rational> {
        self.beta.clone().map_or_else(|| default.to_vec(), |b| vec![b])
    }

    pub fn lambda2s_or(&self, default: &[Rational]) -> Vec<Rational> {
        self.lambda2.clone().map_or_else(|| default.to_vec(), |l| vec![l])
    }
}
