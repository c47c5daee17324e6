use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hthresh::canon::are_isomorphic;
use hthresh::format::{parse_digraph, parse_partitioned, write_digraph, write_partitioned};
use hthresh::graph6::{parse_graph6, write_graph6};
use hthresh::obstructions::{mine_with_jobs, ObstructionSet, MAX_MINING_ORDER};
use hthresh::threshold::{is_h_threshold, recognize_width2, threshold_width, ThresholdRepresentation, Width, Width2};
use hthresh::{factorize, factors_commute, h_product, normalize, product_chain, Digraph, Error, FactorSequence, Graph};

#[derive(Parser)]
#[command(name = "hthresh", version, about = "Products of partitioned graphs over a digraph and threshold width")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Product of two partitioned graph files.
    Product {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        digraph: PathBuf,
    },
    /// Prime factors in normal form, with their commutation matrix.
    Factorize {
        input: PathBuf,
        #[arg(long)]
        digraph: PathBuf,
    },
    /// Threshold width of a graph6 graph, with a witness.
    Width {
        input: PathBuf,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        max_k: u64,
    },
    /// A witness digraph and class sequence. With `--digraph` the digraph is
    /// fixed, otherwise the smallest one up to `--max-k` is used.
    Represent {
        input: PathBuf,
        #[arg(long)]
        digraph: Option<PathBuf>,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u64).range(1..))]
        max_k: u64,
    },
    /// Prints `1`, `2 <route>` or `>2`.
    Recognize2 { input: PathBuf },
    /// Minimal graphs of threshold width above 2.
    Mine {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Checks that a witness rebuilds the graph.
    Verify { input: PathBuf, witness: PathBuf },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ClassCountMismatch { .. } => 3,
            Error::Internal(_) => 4,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn parse_failure(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

type Outcome = Result<(String, u8), Failure>;

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut text).map_err(|e| parse_failure(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| parse_failure(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = read_input(path)?;
    let line = text.lines().map(str::trim).find(|l| !l.is_empty()).ok_or_else(|| parse_failure("no graph6 line"))?;
    Ok(parse_graph6(line)?)
}

fn read_digraph(path: &Path) -> Result<Digraph, Failure> {
    Ok(parse_digraph(&read_input(path)?)?)
}

#[derive(Serialize)]
struct WitnessJson {
    classes: usize,
    arcs: Vec<(usize, usize)>,
    sequence: Vec<usize>,
    order: Vec<usize>,
}

impl WitnessJson {
    fn new(h: &Digraph, sequence: &[usize], order: &[usize]) -> Self {
        WitnessJson {
            classes: h.vertex_count(),
            arcs: h.arcs().map(|(u, v)| (u + 1, v + 1)).collect(),
            sequence: sequence.to_vec(),
            order: order.to_vec(),
        }
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn witness_text(h: &Digraph, sequence: &[usize], order: &[usize]) -> String {
    format!("{}sequence: {}\norder: {}\n", write_digraph(h), join(sequence), join(order))
}

fn dot(g: &Graph, h: Option<&Digraph>, class_of: &dyn Fn(usize) -> Option<usize>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.vertex_count() {
        match class_of(v) {
            Some(c) => writeln!(out, "  {v} [label=\"{v}:{c}\"];").unwrap(),
            None => writeln!(out, "  {v};").unwrap(),
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    if let Some(h) = h {
        out.push_str("digraph H {\n");
        for c in 1..=h.vertex_count() {
            writeln!(out, "  {c};").unwrap();
        }
        for (u, v) in h.arcs() {
            writeln!(out, "  {} -> {};", u + 1, v + 1).unwrap();
        }
        out.push_str("}\n");
    }
    out
}

fn render_witness(format: Format, g: &Graph, h: &Digraph, sequence: &[usize], order: &[usize]) -> String {
    match format {
        Format::Text => witness_text(h, sequence, order),
        Format::Json => json(&WitnessJson::new(h, sequence, order)),
        Format::Dot => {
            let mut class = vec![0; g.vertex_count()];
            for (&v, &c) in order.iter().zip(sequence) {
                class[v] = c;
            }
            dot(g, Some(h), &|v| Some(class[v]))
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn product(format: Format, left: &Path, right: &Path, digraph: &Path) -> Outcome {
    let t = parse_partitioned(&read_input(left)?)?;
    let s = parse_partitioned(&read_input(right)?)?;
    let h = read_digraph(digraph)?;
    let p = h_product(&t, &s, &h)?;
    let out = match format {
        Format::Text => write_partitioned(&p),
        Format::Json => json(&PartitionedJson::new(&p)),
        Format::Dot => dot(p.graph(), None, &|v| Some(p.class_of(v))),
    };
    Ok((out, 0))
}

#[derive(Serialize)]
struct PartitionedJson {
    graph6: String,
    classes: usize,
    class_of: Vec<usize>,
}

impl PartitionedJson {
    fn new(t: &hthresh::PartitionedGraph) -> Self {
        PartitionedJson { graph6: write_graph6(t.graph()), classes: t.class_count(), class_of: t.classes().to_vec() }
    }
}

#[derive(Serialize)]
struct FactorizationJson {
    factors: Vec<PartitionedJson>,
    commutes: Vec<Vec<bool>>,
}

fn factorize_cmd(format: Format, input: &Path, digraph: &Path) -> Outcome {
    let t = parse_partitioned(&read_input(input)?)?;
    let h = read_digraph(digraph)?;
    if t.vertex_count() == 0 {
        return Err(Error::Empty.into());
    }
    let seq = normalize(&factorize(&t, &h)?);
    let fs = seq.factors();
    let commutes: Vec<Vec<bool>> = fs
        .iter()
        .map(|a| fs.iter().map(|b| factors_commute(a, b, &h)).collect::<hthresh::Result<_>>())
        .collect::<hthresh::Result<_>>()?;
    let out = match format {
        Format::Text => {
            let blocks: Vec<String> = fs.iter().map(write_partitioned).collect();
            format!("{}\ncommutes: {}\n", blocks.join("\n"), serde_json::to_string(&commutes).unwrap())
        }
        Format::Json => json(&FactorizationJson { factors: fs.iter().map(PartitionedJson::new).collect(), commutes }),
        Format::Dot => {
            let mut factor = vec![0; t.vertex_count()];
            let mut start = 0;
            for (i, f) in fs.iter().enumerate() {
                factor[start..start + f.vertex_count()].fill(i + 1);
                start += f.vertex_count();
            }
            let p = product_chain(&seq);
            dot(p.graph(), None, &|v| Some(factor[v]))
        }
    };
    Ok((out, 0))
}

#[derive(Serialize)]
struct WidthJson {
    width: Option<usize>,
    max_k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessJson>,
}

fn width_cmd(format: Format, input: &Path, max_k: usize, with_value: bool) -> Outcome {
    let g = read_graph(input)?;
    let (width, rep) = match threshold_width(&g, max_k) {
        Width::Exact { width, representation, .. } => (Some(width), Some(representation)),
        Width::Exceeds(_) => (None, None),
    };
    if let Some(rep) = &rep {
        check(rep, &g)?;
    }
    let out = match (format, &rep) {
        (Format::Json, _) => json(&WidthJson {
            width,
            max_k,
            witness: rep.as_ref().map(|r| WitnessJson::new(&r.h, &r.sequence, &r.order)),
        }),
        (_, None) => format!(">{max_k}\n"),
        (Format::Text, Some(r)) if with_value => {
            format!("{}\n{}", width.unwrap(), witness_text(&r.h, &r.sequence, &r.order))
        }
        (_, Some(r)) => render_witness(format, &g, &r.h, &r.sequence, &r.order),
    };
    Ok((out, 0))
}

fn check(rep: &ThresholdRepresentation, g: &Graph) -> Result<(), Failure> {
    if rep.verify(g) {
        Ok(())
    } else {
        Err(Error::Internal("witness does not rebuild the input".into()).into())
    }
}

fn represent_cmd(format: Format, input: &Path, digraph: Option<&Path>, max_k: usize) -> Outcome {
    let Some(path) = digraph else {
        return width_cmd(format, input, max_k, false);
    };
    let g = read_graph(input)?;
    let h = read_digraph(path)?;
    let out = match is_h_threshold(&g, &h) {
        Some(s) => {
            check(&ThresholdRepresentation { h: h.clone(), order: s.order.clone(), sequence: s.sequence.clone() }, &g)?;
            render_witness(format, &g, &h, &s.sequence, &s.order)
        }
        None if format == Format::Json => "null\n".to_string(),
        None => "none\n".to_string(),
    };
    Ok((out, 0))
}

#[derive(Serialize)]
struct Recognize2Json {
    width: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    route: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessJson>,
}

fn recognize2_cmd(format: Format, input: &Path) -> Outcome {
    let g = read_graph(input)?;
    let (width, route, rep) = match recognize_width2(&g)? {
        Width2::One { representation } => ("1", None, Some(representation)),
        Width2::Two { route, representation, .. } => ("2", Some(route.to_string()), Some(representation)),
        Width2::MoreThanTwo => (">2", None, None),
    };
    if let Some(rep) = &rep {
        check(rep, &g)?;
    }
    let out = match (format, &rep) {
        (Format::Json, _) => json(&Recognize2Json {
            width,
            route,
            witness: rep.as_ref().map(|r| WitnessJson::new(&r.h, &r.sequence, &r.order)),
        }),
        (Format::Dot, Some(r)) => render_witness(format, &g, &r.h, &r.sequence, &r.order),
        _ => match route {
            Some(r) => format!("{width} {r}\n"),
            None => format!("{width}\n"),
        },
    };
    Ok((out, 0))
}

fn mine_cmd(format: Format, max_n: usize, jobs: usize) -> Outcome {
    if max_n > MAX_MINING_ORDER {
        return Err(parse_failure(format!("--max-n is at most {MAX_MINING_ORDER}")));
    }
    let set: ObstructionSet = mine_with_jobs(max_n, jobs)?;
    let out = match format {
        Format::Text => {
            let mut out = format!("{} graphs, {} classes\n", set.obstructions.len(), set.complement_classes);
            for o in &set.obstructions {
                writeln!(out, "{} {} {} complement={}", o.order, o.graph6, o.name, o.complement_graph6).unwrap();
            }
            out
        }
        Format::Json => json(&set),
        Format::Dot => return Err(parse_failure("mine has no dot output")),
    };
    Ok((out, 0))
}

struct Witness {
    h: Digraph,
    sequence: Vec<usize>,
    order: Option<Vec<usize>>,
}

fn parse_witness(text: &str) -> Result<Witness, Failure> {
    let mut digraph_lines = Vec::new();
    let mut sequence = None;
    let mut order = None;
    let numbers = |rest: &str| -> Result<Vec<usize>, Failure> {
        rest.split_whitespace().map(|t| t.parse().map_err(|_| parse_failure(format!("bad number {t:?}")))).collect()
    };
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if let Some(rest) = line.strip_prefix("sequence:") {
            sequence = Some(numbers(rest)?);
        } else if let Some(rest) = line.strip_prefix("order:") {
            order = Some(numbers(rest)?);
        } else {
            digraph_lines.push(line);
        }
    }
    // Output of `width` starts with the width itself.
    if digraph_lines.len() >= 2 && !digraph_lines[0].contains(' ') && !digraph_lines[1].contains(' ') {
        digraph_lines.remove(0);
    }
    let h = parse_digraph(&digraph_lines.join("\n"))?;
    let sequence = sequence.ok_or_else(|| parse_failure("missing `sequence:` line"))?;
    Ok(Witness { h, sequence, order })
}

fn verify_cmd(input: &Path, witness: &Path) -> Outcome {
    let g = read_graph(input)?;
    let w = parse_witness(&read_input(witness)?)?;
    if w.sequence.len() != g.vertex_count() {
        return Ok((format!("mismatch: {} positions for {} vertices\n", w.sequence.len(), g.vertex_count()), 1));
    }
    let ok = if g.vertex_count() == 0 {
        true
    } else {
        let built = product_chain(&FactorSequence::one_vertex_chain(w.h.clone(), &w.sequence)?);
        match w.order {
            Some(order) => {
                let rep = ThresholdRepresentation { h: w.h, order, sequence: w.sequence };
                rep.verify(&g)
            }
            None => are_isomorphic(
                &hthresh::PartitionedGraph::single_class(built.into_graph()),
                &hthresh::PartitionedGraph::single_class(g),
            ),
        }
    };
    Ok(if ok { ("ok\n".to_string(), 0) } else { ("mismatch\n".to_string(), 1) })
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Product { left, right, digraph } => product(format, &left, &right, &digraph),
        Command::Factorize { input, digraph } => factorize_cmd(format, &input, &digraph),
        Command::Width { input, max_k } => width_cmd(format, &input, max_k as usize, true),
        Command::Represent { input, digraph, max_k } => represent_cmd(format, &input, digraph.as_deref(), max_k as usize),
        Command::Recognize2 { input } => recognize2_cmd(format, &input),
        Command::Mine { max_n, jobs } => {
            let jobs = if jobs == 0 { std::thread::available_parallelism().map_or(1, |n| n.get()) } else { jobs };
            mine_cmd(format, max_n, jobs)
        }
        Command::Verify { input, witness } => verify_cmd(&input, &witness),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("hthresh: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
