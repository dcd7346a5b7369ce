//! Command-line front end: every subcommand reads line-oriented text
//! files (`-` for standard input) and exits 0 on success or a true
//! property, 1 when a queried property is false, and 2 on any input
//! error.

use std::error::Error;
use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use pointtopo::analysis::{is_connected, is_discrete, is_t0, is_t1};
use pointtopo::build::{
    topology_from_derivation, topology_from_graph, topology_from_relation_matrix,
};
use pointtopo::continuity::is_continuous;
use pointtopo::dot::hasse_to_dot;
use pointtopo::enumerate::enumerate_topologies;
use pointtopo::formats::{
    parse_derivation, parse_graph, parse_matrix, parse_part_family, parse_point_map,
    parse_preorder, parse_topology, serialize_preorder, serialize_topology,
};
use pointtopo::hasse::hasse_diagram;
use pointtopo::{axiom_report, Topology};

#[derive(Parser)]
#[command(
    name = "pointtopo",
    version,
    about = "Finite topologies on labeled point sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the topology axioms on a topology file
    Validate {
        /// Topology file, or `-` for standard input
        file: String,
    },
    /// Induce the order topology of a preorder file
    FromPreorder {
        /// Preorder file, or `-` for standard input
        file: String,
        /// Require the file to list the complete closed relation
        #[arg(long)]
        strict: bool,
    },
    /// Recover the preorder underlying a topology file
    ToPreorder {
        /// Topology file, or `-` for standard input
        file: String,
    },
    /// Print the minimal open part of every point
    MinimalOpens {
        /// Topology file, or `-` for standard input
        file: String,
    },
    /// Print the unique minimal basis of a topology
    Basis {
        /// Topology file, or `-` for standard input
        file: String,
    },
    /// Test separation and connectedness properties
    #[command(group = ArgGroup::new("props").required(true).multiple(true))]
    Check {
        /// Topology file, or `-` for standard input
        file: String,
        /// Distinct points have distinct minimal open parts
        #[arg(long, group = "props")]
        t0: bool,
        /// Every singleton part is open and closed
        #[arg(long, group = "props")]
        t1: bool,
        /// Every part is open
        #[arg(long, group = "props")]
        discrete: bool,
        /// Only the empty and full parts are open and closed
        #[arg(long, group = "props")]
        connected: bool,
    },
    /// Induce the order topology of a directed graph file
    FromGraph {
        /// Graph file, or `-` for standard input
        file: String,
    },
    /// Induce the order topology of a derivation trace file
    FromDerivation {
        /// Derivation file, or `-` for standard input
        file: String,
    },
    /// Induce the order topology of a basis relation matrix file
    FromMatrix {
        /// Matrix file, or `-` for standard input
        file: String,
    },
    /// List every topology on a small point set
    Enumerate {
        /// Point count (1 to 5)
        #[arg(short, value_name = "N")]
        n: usize,
        /// Keep only topologies satisfying T0
        #[arg(long)]
        t0_only: bool,
        /// Print the number of topologies instead of the topologies
        #[arg(long)]
        count_only: bool,
    },
    /// Print the Hasse diagram of a topology's induced preorder
    Hasse {
        /// Topology file, or `-` for standard input
        file: String,
        /// Emit DOT instead of plain text
        #[arg(long)]
        dot: bool,
    },
    /// Test whether a point map between two topologies is continuous
    Continuity {
        /// Map file of `<source> => <target>` lines, or `-` for standard input
        map: String,
        /// Source topology file
        source: String,
        /// Target topology file
        target: String,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &str) -> Result<String, Box<dyn Error>> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        Ok(fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?)
    }
}

fn load_topology(path: &str) -> Result<Topology, Box<dyn Error>> {
    Ok(parse_topology(&read_input(path)?)?)
}

fn verdict(all_true: bool) -> ExitCode {
    if all_true {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: Command) -> Result<ExitCode, Box<dyn Error>> {
    match command {
        Command::Validate { file } => {
            let (shape, parts) = parse_part_family(&read_input(&file)?)?;
            let report = axiom_report(&shape, &parts);
            let presence = |present| if present { "present" } else { "missing" };
            println!("empty part: {}", presence(report.has_empty));
            println!("full part: {}", presence(report.has_full));
            match report.union_failure {
                None => println!("union closure: ok"),
                Some((a, b)) => println!(
                    "union closure: missing union of {} and {}",
                    shape.part_string(a),
                    shape.part_string(b)
                ),
            }
            match report.intersection_failure {
                None => println!("intersection closure: ok"),
                Some((a, b)) => println!(
                    "intersection closure: missing intersection of {} and {}",
                    shape.part_string(a),
                    shape.part_string(b)
                ),
            }
            Ok(verdict(report.is_valid()))
        }
        Command::FromPreorder { file, strict } => {
            let order = parse_preorder(&read_input(&file)?, strict)?;
            print!("{}", serialize_topology(&order.to_topology()));
            Ok(ExitCode::SUCCESS)
        }
        Command::ToPreorder { file } => {
            let topo = load_topology(&file)?;
            print!("{}", serialize_preorder(&topo.to_preorder()));
            Ok(ExitCode::SUCCESS)
        }
        Command::MinimalOpens { file } => {
            let topo = load_topology(&file)?;
            let shape = topo.shape();
            for p in 0..shape.point_count() {
                let minimal = topo.minimal_open_part(p)?;
                println!("{}: {}", shape.label(p), shape.part_string(minimal));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Basis { file } => {
            let topo = load_topology(&file)?;
            for &element in topo.minimal_basis().elements() {
                println!("{}", topo.shape().part_string(element));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            file,
            t0,
            t1,
            discrete,
            connected,
        } => {
            let topo = load_topology(&file)?;
            let mut findings: Vec<(&str, bool)> = Vec::new();
            if t0 {
                findings.push(("T0", is_t0(&topo)));
            }
            if t1 {
                findings.push(("T1", is_t1(&topo)));
            }
            if discrete {
                findings.push(("discrete", is_discrete(&topo)));
            }
            if connected {
                findings.push(("connected", is_connected(&topo)));
            }
            for &(name, holds) in &findings {
                println!("{name}: {holds}");
            }
            Ok(verdict(findings.iter().all(|&(_, holds)| holds)))
        }
        Command::FromGraph { file } => {
            let (shape, edges) = parse_graph(&read_input(&file)?)?;
            let loops = edges.iter().filter(|(p, q)| p == q).count();
            if loops > 0 {
                eprintln!("note: {loops} self-loop(s) are redundant and were ignored");
            }
            let topo = topology_from_graph(&shape, &edges)?;
            print!("{}", serialize_topology(&topo));
            Ok(ExitCode::SUCCESS)
        }
        Command::FromDerivation { file } => {
            let (shape, trace) = parse_derivation(&read_input(&file)?)?;
            let topo = topology_from_derivation(&shape, &trace)?;
            print!("{}", serialize_topology(&topo));
            Ok(ExitCode::SUCCESS)
        }
        Command::FromMatrix { file } => {
            let matrix = parse_matrix(&read_input(&file)?)?;
            print!(
                "{}",
                serialize_topology(&topology_from_relation_matrix(&matrix))
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            n,
            t0_only,
            count_only,
        } => {
            let mut topologies = enumerate_topologies(n, t0_only)?;
            if count_only {
                println!("{}", topologies.count());
            } else {
                let mut first = true;
                for topo in topologies.by_ref() {
                    if !first {
                        println!();
                    }
                    first = false;
                    print!("{}", serialize_topology(&topo));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Hasse { file, dot } => {
            let topo = load_topology(&file)?;
            let diagram = hasse_diagram(&topo.to_preorder());
            if dot {
                print!("{}", hasse_to_dot(&diagram));
            } else {
                let names: Vec<String> = (0..diagram.classes().len())
                    .map(|c| diagram.class_name(c))
                    .collect();
                println!("classes: {}", names.join(" "));
                for (lower, upper) in diagram.edge_names() {
                    println!("{lower} < {upper}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Continuity {
            map,
            source,
            target,
        } => {
            let source = load_topology(&source)?;
            let target = load_topology(&target)?;
            let map = parse_point_map(&read_input(&map)?, source.shape(), target.shape())?;
            let continuous = is_continuous(&map, &source, &target)?;
            println!("continuous: {continuous}");
            Ok(verdict(continuous))
        }
    }
}
