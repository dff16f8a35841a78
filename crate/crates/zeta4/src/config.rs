//! Command-line parsing and the validated run configuration.

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use zeta4_core::sums::SumVariant;
use zeta4_core::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    /// Six double sums and the harmonic sum against the recurrence.
    Variants,
    /// The double sum with all-positive terms against the harmonic sum.
    Identity5,
    /// `ε -> 0` limit of the `A_l(ε)` family, plus antisymmetry at `ε = 0`.
    EpsilonLimit,
    /// Both sides of the transformation at random rational parameters.
    Andrews,
    /// The `s = 3` specialization for all six pair choices.
    Specialization,
}

impl VerifyKind {
    pub fn name(self) -> &'static str {
        match self {
            VerifyKind::Variants => "variants",
            VerifyKind::Identity5 => "identity5",
            VerifyKind::EpsilonLimit => "epsilon-limit",
            VerifyKind::Andrews => "andrews",
            VerifyKind::Specialization => "specialization",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "zeta4", version, about = "Exact verification of the rational approximations to ζ(4)")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, value_parser = parse_threads, default_value = "auto")]
    pub threads: Threads,

    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Print `n, u_n, v_n` for `0 <= n <= max-n`.
    Gen {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
    },
    /// Run one family of exact checks.
    Verify {
        #[arg(value_enum)]
        kind: VerifyKind,

        #[arg(long, default_value_t = 10)]
        max_n: usize,

        /// Comma-separated subset of F,V1,V2,V3,V4,V5.
        #[arg(long, value_delimiter = ',', value_parser = parse_variant)]
        variants: Vec<SumVariant>,

        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,

        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,

        #[arg(long, default_value_t = 0)]
        seed: u64,

        #[arg(long, default_value_t = 6)]
        m_max: usize,

        /// Truncation order of the ε-jets.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
        jet_order: u32,
    },
    /// Certified brackets of `r_n = u_n ζ(4) - v_n`.
    Residuals {
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,

        /// Width of the ζ(4) enclosure, e.g. `1e-200` or `1/1000`.
        #[arg(long, value_parser = parse_width)]
        enclosure_width: Option<Rational>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threads {
    Auto,
    Fixed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Gen,
    Verify(VerifyKind),
    Residuals,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub max_n: usize,
    /// Empty means all six.
    pub variants: Vec<SumVariant>,
    pub s: usize,
    pub trials: usize,
    pub seed: u64,
    pub m_max: usize,
    pub jet_order: usize,
    /// `None` picks a width fine enough for `max_n`.
    pub enclosure_width: Option<Rational>,
    pub format: Format,
    pub threads: Threads,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            max_n: 10,
            variants: Vec::new(),
            s: 3,
            trials: 100,
            seed: 0,
            m_max: 6,
            jet_order: 2,
            enclosure_width: None,
            format: Format::Csv,
            threads: Threads::Auto,
        }
    }

    pub fn selected_variants(&self) -> Vec<SumVariant> {
        if self.variants.is_empty() {
            return SumVariant::ALL.to_vec();
        }
        let mut v = self.variants.clone();
        v.sort();
        v.dedup();
        v
    }
}

impl From<Cli> for RunConfig {
    fn from(cli: Cli) -> Self {
        let mut cfg = match cli.command {
            CliCommand::Gen { max_n } => RunConfig {
                max_n,
                ..RunConfig::new(Command::Gen)
            },
            CliCommand::Verify {
                kind,
                max_n,
                variants,
                s,
                trials,
                seed,
                m_max,
                jet_order,
            } => RunConfig {
                max_n,
                variants,
                s: s as usize,
                trials: trials as usize,
                seed,
                m_max,
                jet_order: jet_order as usize,
                ..RunConfig::new(Command::Verify(kind))
            },
            CliCommand::Residuals {
                max_n,
                enclosure_width,
            } => RunConfig {
                max_n: max_n as usize,
                enclosure_width,
                ..RunConfig::new(Command::Residuals)
            },
        };
        cfg.format = cli.format;
        cfg.threads = cli.threads;
        cfg
    }
}

fn parse_threads(s: &str) -> Result<Threads, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(Threads::Auto);
    }
    match s.parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("expected `auto` or a positive integer, got {s:?}")),
        Ok(k) => Ok(Threads::Fixed(k)),
    }
}

fn parse_variant(s: &str) -> Result<SumVariant, String> {
    s.trim().parse().map_err(|e: zeta4_core::Error| e.to_string())
}

/// Accepts `p/q`, plain decimals, and `XeY` scientific notation.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let bad = || format!("not a rational number: {s:?}");
    if let Some((p, q)) = s.split_once('/') {
        let p: zeta4_core::Integer = p.trim().parse().map_err(|_| bad())?;
        let q: zeta4_core::Integer = q.trim().parse().map_err(|_| bad())?;
        if q == 0.into() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.trim_start_matches(['+', '-']).is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !frac_part.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac_part}");
    let digits = if digits == "-" || digits == "+" { format!("{digits}0") } else { digits };
    let numer: zeta4_core::Integer = digits.parse().map_err(|_| bad())?;
    let shift = exp - frac_part.len() as i32;
    let ten = Rational::from_integer(10.into());
    let scale = num_traits::pow(ten, shift.unsigned_abs() as usize);
    let value = Rational::from_integer(numer);
    Ok(if shift >= 0 { value * scale } else { value / scale })
}

fn parse_width(s: &str) -> Result<Rational, String> {
    let w = parse_rational(s)?;
    if !w.is_positive() {
        return Err(format!("enclosure width must be positive, got {s}"));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use zeta4_core::arith::rat;

    #[test]
    fn rational_syntax() {
        assert_eq!(parse_rational("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rational("-6/8").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("0.125").unwrap(), rat(1, 8));
        assert_eq!(parse_rational("1e-3").unwrap(), rat(1, 1000));
        assert_eq!(parse_rational("2.5E2").unwrap(), rat(250, 1));
        assert_eq!(parse_rational("-.5").unwrap(), rat(-1, 2));
        for bad in ["", "1/0", "abc", "1e", "1.2.3", "e5", "."] {
            assert!(parse_rational(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn width_must_be_positive() {
        assert!(parse_width("0").is_err());
        assert!(parse_width("-1e-5").is_err());
        assert!(parse_width("1e-150").is_ok());
    }

    #[test]
    fn threads_syntax() {
        assert_eq!(parse_threads("auto"), Ok(Threads::Auto));
        assert_eq!(parse_threads("4"), Ok(Threads::Fixed(4)));
        assert!(parse_threads("0").is_err());
        assert!(parse_threads("-2").is_err());
    }

    #[test]
    fn cli_maps_to_config() {
        let cli = Cli::try_parse_from([
            "zeta4", "verify", "andrews", "--s", "1", "--trials", "1", "--seed", "7", "--m-max", "0",
        ])
        .unwrap();
        let cfg = RunConfig::from(cli);
        assert_eq!(cfg.command, Command::Verify(VerifyKind::Andrews));
        assert_eq!((cfg.s, cfg.trials, cfg.seed, cfg.m_max), (1, 1, 7, 0));
        assert_eq!(cfg.jet_order, 2);

        let cli = Cli::try_parse_from(["zeta4", "verify", "variants", "--variants", "v2,F,V2"]).unwrap();
        let cfg = RunConfig::from(cli);
        assert_eq!(cfg.selected_variants(), [SumVariant::F, SumVariant::V2]);
    }

    #[test]
    fn cli_rejects_bad_bounds() {
        for args in [
            &["zeta4", "verify", "andrews", "--s", "0"][..],
            &["zeta4", "verify", "epsilon-limit", "--jet-order", "1"],
            &["zeta4", "residuals", "--max-n", "0"],
            &["zeta4", "gen", "--format", "xml"],
            &["zeta4", "verify", "variants", "--variants", "V6"],
            &["zeta4", "verify", "nonsense"],
        ] {
            assert!(Cli::try_parse_from(args).is_err(), "{args:?}");
        }
    }
}
