mod commands;
mod error;
mod params;

use clap::{value_parser, Arg, ArgMatches, Command};

use crate::commands::Output;
use crate::error::CliError;
use crate::params::{add_params, Param, Resolved};

fn with_output(cmd: Command) -> Command {
    cmd.arg(Arg::new("output").short('o').long("output").value_name("FILE").help("output file [default: stdout]"))
}

fn cli() -> Command {
    let experiment_out = |cmd: Command| {
        with_output(cmd).arg(Arg::new("svg").long("svg").value_name("FILE").help("also write an SVG line plot"))
    };
    Command::new("netinf")
        .about("Simulate diffusion cascades over networks and infer the networks back from them")
        .version(env!("CARGO_PKG_VERSION"))
        .subcommand_required(true)
        .arg_required_else_help(true)
        .arg(
            Arg::new("threads")
                .long("threads")
                .global(true)
                .value_name("K")
                .value_parser(value_parser!(usize))
                .help("worker threads [default: available parallelism]; results do not depend on it"),
        )
        .subcommand(with_output(add_params(
            Command::new("generate").about("Write a synthetic network"),
            &commands::GENERATE,
        )))
        .subcommand(with_output(add_params(
            Command::new("simulate").about("Simulate cascades over a network"),
            &commands::SIMULATE,
        )))
        .subcommand(with_output(add_params(
            Command::new("infer").about("Infer a network from cascades"),
            &commands::INFER,
        )))
        .subcommand(with_output(add_params(
            Command::new("diagnose").about("Check recovery conditions at the true rates"),
            &commands::DIAGNOSE,
        )))
        .subcommand(
            Command::new("experiment")
                .about("Run seeded recovery experiments and write CSV")
                .subcommand_required(true)
                .subcommand(experiment_out(add_params(
                    Command::new("scaling").about("Success probability against scaled cascade counts"),
                    &commands::SCALING,
                )))
                .subcommand(experiment_out(add_params(
                    Command::new("comparison").about("F1 of several methods against cascade counts"),
                    &commands::COMPARISON,
                ))),
        )
}

fn run(matches: &ArgMatches) -> Result<(), CliError> {
    if let Some(&k) = matches.get_one::<usize>("threads") {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| CliError::Runtime(format!("cannot start thread pool: {e}")))?;
    }
    let (name, sub) = matches.subcommand().expect("subcommand is required");
    let (name, sub, params): (String, &ArgMatches, &'static [Param]) = match name {
        "generate" => (name.into(), sub, &commands::GENERATE),
        "simulate" => (name.into(), sub, &commands::SIMULATE),
        "infer" => (name.into(), sub, &commands::INFER),
        "diagnose" => (name.into(), sub, &commands::DIAGNOSE),
        "experiment" => match sub.subcommand().expect("subcommand is required") {
            ("scaling", s) => ("experiment scaling".into(), s, &commands::SCALING),
            ("comparison", s) => ("experiment comparison".into(), s, &commands::COMPARISON),
            _ => unreachable!(),
        },
        _ => unreachable!(),
    };
    let resolved = Resolved::new(&name, params, sub)?;
    let out = Output { path: sub.get_one::<String>("output").map(String::as_str) };
    let svg = sub.try_get_one::<String>("svg").ok().flatten().map(String::as_str);
    match name.as_str() {
        "generate" => commands::generate(&resolved, &out),
        "simulate" => commands::simulate(&resolved, &out),
        "infer" => commands::infer(&resolved, &out),
        "diagnose" => commands::diagnose(&resolved, &out),
        "experiment scaling" => commands::scaling(&resolved, &out, svg),
        _ => commands::comparison(&resolved, &out, svg),
    }
}

fn main() {
    let matches = cli().get_matches();
    if let Err(e) = run(&matches) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

#[cfg(test)]
mod tests {
    #[test]
    fn command_definition_is_consistent() {
        super::cli().debug_assert();
    }
}
