use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use kappa_iso::cli::{cmd_classify, cmd_emit, cmd_examples, cmd_verify, resolve_config, EmitObject, Suite};
use kappa_iso::render::OutputFormat;
use kappa_iso::Generator;

#[derive(Parser)]
#[command(name = "kappa", version, about = "κ-deformations of inhomogeneous orthogonal Hopf algebras")]
struct Args {
    #[command(subcommand)]
    command: Command,
    /// JSON run configuration.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Built-in configuration (see `kappa examples`).
    #[arg(long, global = true)]
    example: Option<String>,
    /// Truncation order N: identities are checked modulo κ^{-(N+1)}.
    #[arg(long, global = true)]
    order: Option<usize>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// "P μ" or "M μ ν".
    #[arg(long, global = true)]
    generator: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "all")]
    suite: SuiteArg,
}

#[derive(Subcommand)]
enum Command {
    /// Orbit of τ: sign of τ², Yang-Baxter type, stability group.
    Classify,
    /// Print a deformation object.
    Emit {
        #[arg(value_enum)]
        object: Object,
    },
    /// Run verification suites; exit 1 if any check fails.
    Verify,
    /// List the built-in configurations.
    Examples,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Hopf,
    Mr,
    Twist,
    Minkowski,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Object {
    Coproduct,
    Antipode,
    Pi,
    #[value(name = "c_tau")]
    CTau,
    #[value(name = "r_matrix")]
    RMatrix,
    Twist,
    Schouten,
}

fn run(args: Args) -> kappa_iso::Result<u8> {
    let format = |cfg_format: OutputFormat| match args.format {
        Some(Format::Text) => OutputFormat::Text,
        Some(Format::Json) => OutputFormat::Json,
        Some(Format::Latex) => OutputFormat::Latex,
        None => cfg_format,
    };
    if let Command::Examples = args.command {
        println!("{}", cmd_examples(format(OutputFormat::Text))?);
        return Ok(0);
    }
    if let Some(0) = args.order {
        return Err(kappa_iso::Error::Invalid("--order must be at least 1".into()));
    }
    let cfg = resolve_config(args.example.as_deref(), args.config.as_deref())?;
    let fmt = format(cfg.output_format);
    match args.command {
        Command::Classify => println!("{}", cmd_classify(&cfg, fmt)?),
        Command::Emit { object } => {
            let object = match object {
                Object::Coproduct => EmitObject::Coproduct,
                Object::Antipode => EmitObject::Antipode,
                Object::Pi => EmitObject::Pi,
                Object::CTau => EmitObject::CTau,
                Object::RMatrix => EmitObject::RMatrix,
                Object::Twist => EmitObject::Twist,
                Object::Schouten => EmitObject::Schouten,
            };
            let generator = args.generator.as_deref().map(Generator::parse).transpose()?;
            println!("{}", cmd_emit(&cfg, object, generator, args.order, fmt)?);
        }
        Command::Verify => {
            let suite = match args.suite {
                SuiteArg::Hopf => Suite::Hopf,
                SuiteArg::Mr => Suite::Mr,
                SuiteArg::Twist => Suite::Twist,
                SuiteArg::Minkowski => Suite::Minkowski,
                SuiteArg::All => Suite::All,
            };
            let outcome = cmd_verify(&cfg, suite, args.order)?;
            println!("{}", outcome.render(fmt));
            return Ok(outcome.exit_code());
        }
        Command::Examples => unreachable!(),
    }
    Ok(0)
}

fn main() -> ExitCode {
    // Usage errors exit with status 2 from inside clap.
    let args = Args::parse();
    match run(args) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
