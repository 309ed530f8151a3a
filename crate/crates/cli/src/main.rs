use std::fs;
use std::process::ExitCode;
use std::sync::Arc;

use affine_biconvex::affine::{
    format_word, inversion_set_affine, length_j, parse_letter, reduced_word_j, window,
    word_element, AffineRoot, AffineRootJson, AffineRootSet, AffineWeylElement, AffineWeylJson,
};
use affine_biconvex::biconvex::{
    classify_biconvex, enumerate_biconvex_bruteforce, nabla, parametrize, BiconvexClass, ParamJson,
    ViewJson,
};
use affine_biconvex::cartan::format_rational;
use affine_biconvex::verify::{self, Report};
use affine_biconvex::words::{act, chi, classify_word, equivalent, z_word, WordJson};
use affine_biconvex::{root_system, Error, RootSystem, RootVec, SubSystem, Subset};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "biconvex",
    version,
    about = "Biconvex sets and infinite reduced words in affine Weyl groups"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Cartan type, e.g. A2, B3, G2
    #[arg(long = "type", global = true, default_value = "A1")]
    type_label: String,
    /// Index set J as comma-separated 1-based labels (default: all)
    #[arg(long = "J", global = true)]
    j: Option<String>,
    /// Index set K as comma-separated 1-based labels (default: empty)
    #[arg(long = "K", global = true)]
    k: Option<String>,
    /// Level cutoff N
    #[arg(long, short = 'N', global = true)]
    cutoff: Option<i32>,
    /// Length bound
    #[arg(long, global = true)]
    len: Option<usize>,
    /// Also write the JSON output to this file
    #[arg(long, global = true)]
    out: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Roots of Delta_J, its components, highest roots and the affine window
    Roots,
    /// An element of W_J given as a word in the letters c1.., a1..
    Weyl {
        /// Comma-separated letters, e.g. "c1,a1"
        #[arg(long, default_value = "")]
        word: String,
    },
    #[command(subcommand)]
    Biconvex(BiconvexCmd),
    #[command(subcommand)]
    Word(WordCmd),
    /// Run a verification suite
    Verify {
        #[arg(value_parser = ["thm2.6", "prop4.6", "thm6.7", "thm7.4", "cor7.6", "z-words", "action", "orbits", "length"])]
        suite: String,
        /// Random samples for the randomized suites
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum BiconvexCmd {
    /// The set nabla(K, u, y) of a parameter
    Nabla {
        /// Parameter JSON, or @FILE
        #[arg(long)]
        param: String,
    },
    /// The parameter of a set given as {"tail", "finite"}
    Parametrize {
        /// Set JSON, or @FILE
        #[arg(long)]
        set: String,
    },
    /// Which of the four shapes a biconvex set has
    Classify {
        /// Set JSON, or @FILE
        #[arg(long)]
        set: String,
        /// Classify the complement of the given set in Delta_J+
        #[arg(long)]
        complement: bool,
    },
    /// All biconvex sets of at most --len real roots of level <= N
    Enumerate,
}

#[derive(Subcommand)]
enum WordCmd {
    /// Z^K_J, or chi(K, u, y) when a parameter is given
    Make {
        #[arg(long)]
        param: Option<String>,
    },
    /// x.s for x given by letters
    Act {
        #[arg(long)]
        by: String,
        #[arg(long)]
        word: String,
    },
    /// Whether two words are equivalent
    Equiv {
        #[arg(long)]
        word: String,
        #[arg(long)]
        other: String,
    },
    /// Parameter, tail and orbit of a word
    Classify {
        #[arg(long)]
        word: String,
    },
}

enum Failure {
    Usage(String),
    Negative(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotBiconvex(_)
            | Error::NotPointedBiclosed
            | Error::NotPointedClosed
            | Error::NotReduced(_)
            | Error::Internal(_) => Failure::Negative(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

struct Output {
    json: Value,
    table: String,
    passed: bool,
}

impl Output {
    fn ok(json: Value, table: String) -> Self {
        Output {
            json,
            table,
            passed: true,
        }
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_subset(text: &str, rank: usize) -> Res<Subset> {
    let mut labels = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let l: usize = part
            .parse()
            .map_err(|_| usage(format!("bad index `{part}`")))?;
        if l == 0 || l > rank {
            return Err(usage(format!("index {l} out of range 1..={rank}")));
        }
        labels.push(l);
    }
    Ok(Subset::from_labels(&labels).expect("labels checked"))
}

fn read_json<T: serde::de::DeserializeOwned>(arg: &str) -> Res<T> {
    let text = match arg.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?,
        None => arg.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| usage(format!("invalid JSON: {e}")))
}

struct Ctx {
    rs: Arc<RootSystem>,
    sub: SubSystem,
    k: Subset,
    cutoff: Option<i32>,
    len: Option<usize>,
}

impl Ctx {
    fn new(c: &Common) -> Res<Self> {
        let rs = root_system(&c.type_label)?;
        let j = match &c.j {
            Some(t) => parse_subset(t, rs.rank())?,
            None => rs.full_index_set(),
        };
        let k = match &c.k {
            Some(t) => parse_subset(t, rs.rank())?,
            None => Subset::EMPTY,
        };
        if !k.is_subset_of(j) {
            return Err(usage(format!("K = {k} is not inside J = {j}")));
        }
        if c.cutoff.is_some_and(|n| n < 0) {
            return Err(usage("cutoff must be nonnegative"));
        }
        let sub = rs.sub_system(j)?;
        Ok(Ctx {
            rs,
            sub,
            k,
            cutoff: c.cutoff,
            len: c.len,
        })
    }

    fn cutoff_or(&self, n: i32) -> i32 {
        self.cutoff.unwrap_or(n)
    }
}

fn coords(rs: &RootSystem, v: &RootVec) -> Value {
    json!(v.coords(rs.rank()))
}

fn root_json(rs: &RootSystem, b: &AffineRoot) -> Value {
    json!({ "root": AffineRootJson::new(b, rs.rank()), "text": b.to_string() })
}

fn roots_json(rs: &RootSystem, set: &AffineRootSet) -> Value {
    Value::Array(set.iter().map(|b| root_json(rs, b)).collect())
}

fn roots_table(set: &AffineRootSet) -> String {
    let items: Vec<String> = set.iter().map(|b| b.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

fn cmd_roots(ctx: &Ctx) -> Res<Output> {
    let rs = &ctx.rs;
    let sub = &ctx.sub;
    let n = ctx.cutoff_or(2);
    let win = window(sub, n, true);
    let gram: Vec<Vec<String>> = rs
        .gram()
        .iter()
        .map(|row| row.iter().map(format_rational).collect())
        .collect();
    let roots: Vec<Value> = sub
        .roots()
        .iter()
        .map(|r| json!({"coords": coords(rs, r), "text": r.to_root_string()}))
        .collect();
    let json = json!({
        "type": rs.label(),
        "J": sub.index_set().labels(),
        "gram": gram,
        "roots": roots,
        "components": sub.components().iter().map(|c| c.labels()).collect::<Vec<_>>(),
        "highest_roots": sub.highest_roots().iter().map(|r| coords(rs, r)).collect::<Vec<_>>(),
        "cutoff": n,
        "window": roots_json(rs, &win),
    });
    let mut table = format!("type {}  J = {}\n", rs.label(), sub.index_set());
    table += &format!(
        "roots ({}): {}\n",
        sub.roots().len(),
        sub.roots()
            .iter()
            .map(|r| r.to_root_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    for (c, theta) in sub.components().iter().zip(sub.highest_roots()) {
        table += &format!("component {c}: highest root {}\n", theta.to_root_string());
    }
    table += &format!("window N={n} ({}): {}\n", win.len(), roots_table(&win));
    Ok(Output::ok(json, table))
}

fn parse_letters(text: &str, sub: &SubSystem) -> Res<Vec<affine_biconvex::affine::AffineLetter>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| parse_letter(t, sub).map_err(Failure::from))
        .collect()
}

fn element_json(x: &AffineWeylElement, sub: &SubSystem) -> Res<(Value, String)> {
    let rs = sub.root_system();
    let word = reduced_word_j(x, sub)?;
    let phi = inversion_set_affine(x, sub)?;
    let json = json!({
        "element": AffineWeylJson::from(x),
        "length": length_j(x, sub)?,
        "reduced_word": format_word(&word),
        "inversions": roots_json(rs, &phi),
    });
    let table = format!(
        "element {x:?}\nlength {}\nreduced word {}\ninversions {}\n",
        word.len(),
        format_word(&word),
        roots_table(&phi)
    );
    Ok((json, table))
}

fn cmd_weyl(ctx: &Ctx, word: &str) -> Res<Output> {
    let letters = parse_letters(word, &ctx.sub)?;
    let x = word_element(&letters, &ctx.sub)?;
    let (json, table) = element_json(&x, &ctx.sub)?;
    Ok(Output::ok(json, table))
}

fn view_output(view: &affine_biconvex::biconvex::BiconvexSetView) -> Output {
    let json = json!({ "param": ParamJson::from(&view.param), "set": view.to_json() });
    let tail: Vec<String> = view.tail.iter().map(|e| e.to_root_string()).collect();
    let table = format!(
        "param {:?}\ntail <{}>\nfinite part {}\nroots up to level {}: {}\n",
        view.param,
        tail.join(", "),
        roots_table(&view.finite),
        view.cutoff,
        roots_table(&view.materialize())
    );
    Output::ok(json, table)
}

fn class_output(class: &BiconvexClass) -> Output {
    let (json, table) = match class {
        BiconvexClass::Finite(z) => (
            json!({"class": "a", "z": AffineWeylJson::from(z)}),
            format!("(a) Phi_J(z), z = {z:?}"),
        ),
        BiconvexClass::CoFinite(z) => (
            json!({"class": "b", "z": AffineWeylJson::from(z)}),
            format!("(b) Delta_J+ - Phi_J(z), z = {z:?}"),
        ),
        BiconvexClass::Infinite(p) => (
            json!({"class": "c", "param": ParamJson::from(p)}),
            format!("(c) nabla{p:?}"),
        ),
        BiconvexClass::CoInfinite(p) => (
            json!({"class": "d", "param": ParamJson::from(p)}),
            format!("(d) Delta_J+ - nabla{p:?}"),
        ),
    };
    Output::ok(json, table + "\n")
}

fn cmd_biconvex(ctx: &Ctx, cmd: &BiconvexCmd) -> Res<Output> {
    match cmd {
        BiconvexCmd::Nabla { param } => {
            let p = read_json::<ParamJson>(param)?.to_param(&ctx.rs)?;
            Ok(view_output(&nabla(&p, ctx.cutoff_or(3))?))
        }
        BiconvexCmd::Parametrize { set } => {
            let view: ViewJson = read_json(set)?;
            let p = parametrize(&view.to_tailed(&ctx.sub)?, &ctx.sub)?;
            Ok(Output::ok(json!(ParamJson::from(&p)), format!("{p:?}\n")))
        }
        BiconvexCmd::Classify { set, complement } => {
            let view: ViewJson = read_json(set)?;
            let mut b = view.to_tailed(&ctx.sub)?;
            if *complement {
                b = b.complement(&ctx.sub);
            }
            Ok(class_output(&classify_biconvex(&b, &ctx.sub)?))
        }
        BiconvexCmd::Enumerate => {
            let n = ctx.cutoff_or(1);
            let max = ctx.len.unwrap_or(n.max(0) as usize);
            let sets = enumerate_biconvex_bruteforce(&ctx.sub, n, max)?;
            let json = json!({
                "cutoff": n,
                "max_size": max,
                "count": sets.len(),
                "sets": sets.iter().map(|s| roots_json(&ctx.rs, s)).collect::<Vec<_>>(),
            });
            let mut table = format!("{} biconvex sets (N = {n}, size <= {max})\n", sets.len());
            for s in &sets {
                table += &format!("{}\n", roots_table(s));
            }
            Ok(Output::ok(json, table))
        }
    }
}

fn word_output(s: &affine_biconvex::words::InfiniteWord) -> Res<Output> {
    let class = classify_word(s)?;
    let tail: Vec<String> = s
        .tail_support()
        .iter()
        .map(|e| e.to_root_string())
        .collect();
    let json = json!({
        "word": s.to_json(),
        "text": s.to_string(),
        "param": ParamJson::from(&class.canonical_param),
        "tail": s.tail_support().iter().map(|e| coords(s.sub().root_system(), e)).collect::<Vec<_>>(),
        "orbit": class.canonical_param.k().labels(),
    });
    let table = format!(
        "word {s}\nparam {:?}\ntail {{{}}}\norbit of Z^K with K = {}\n",
        class.canonical_param,
        tail.join(", "),
        class.canonical_param.k()
    );
    Ok(Output::ok(json, table))
}

fn cmd_word(ctx: &Ctx, cmd: &WordCmd) -> Res<Output> {
    match cmd {
        WordCmd::Make { param } => {
            let s = match param {
                Some(p) => chi(&read_json::<ParamJson>(p)?.to_param(&ctx.rs)?)?,
                None => z_word(&ctx.sub, ctx.k)?,
            };
            word_output(&s)
        }
        WordCmd::Act { by, word } => {
            let s = read_json::<WordJson>(word)?.to_word(&ctx.rs)?;
            let x = word_element(&parse_letters(by, s.sub())?, s.sub())?;
            word_output(&act(&x, &s)?)
        }
        WordCmd::Equiv { word, other } => {
            let s = read_json::<WordJson>(word)?.to_word(&ctx.rs)?;
            let t = read_json::<WordJson>(other)?.to_word(&ctx.rs)?;
            let eq = equivalent(&s, &t)?;
            Ok(Output::ok(json!({ "equivalent": eq }), format!("{eq}\n")))
        }
        WordCmd::Classify { word } => word_output(&read_json::<WordJson>(word)?.to_word(&ctx.rs)?),
    }
}

fn report_output(r: &Report) -> Output {
    let json = json!({
        "suite": r.suite,
        "passed": r.passed(),
        "checks": r.checks,
        "failures": r.failures,
        "notes": r.notes,
    });
    let mut table = format!(
        "{} {}: {} checks, {} failures\n",
        r.suite,
        if r.passed() { "PASS" } else { "FAIL" },
        r.checks,
        r.failures.len()
    );
    for n in &r.notes {
        table += &format!("  {n}\n");
    }
    for f in &r.failures {
        table += &format!("  counterexample: {f}\n");
    }
    Output {
        json,
        table,
        passed: r.passed(),
    }
}

fn cmd_verify(ctx: &Ctx, suite: &str, samples: usize, seed: u64) -> Res<Output> {
    let rs = &ctx.rs;
    let n = ctx.cutoff_or(6);
    let report = match suite {
        "thm2.6" => verify::finite_sets(&ctx.sub, ctx.len.unwrap_or(5), n, 2)?,
        "prop4.6" => verify::classical_subsets(&ctx.sub)?,
        "thm6.7" => verify::parametrization(rs, ctx.len.unwrap_or(3))?,
        "thm7.4" => verify::words_realize_nabla(rs, ctx.len.unwrap_or(3), n)?,
        "cor7.6" => verify::shapes(rs, ctx.len.unwrap_or(3))?,
        "z-words" => verify::z_words(rs, n)?,
        "action" => verify::action_laws(rs, samples, ctx.len.unwrap_or(3), n, seed)?,
        "orbits" => verify::orbits(rs, samples, ctx.len.unwrap_or(4), seed)?,
        "length" => verify::length_oracle(&ctx.sub, ctx.len.unwrap_or(6))?,
        other => return Err(usage(format!("unknown suite {other}"))),
    };
    Ok(report_output(&report))
}

fn run(cli: &Cli) -> Res<Output> {
    let ctx = Ctx::new(&cli.common)?;
    match &cli.command {
        Command::Roots => cmd_roots(&ctx),
        Command::Weyl { word } => cmd_weyl(&ctx, word),
        Command::Biconvex(cmd) => cmd_biconvex(&ctx, cmd),
        Command::Word(cmd) => cmd_word(&ctx, cmd),
        Command::Verify {
            suite,
            samples,
            seed,
        } => cmd_verify(&ctx, suite, *samples, *seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&out.json).expect("values serialize");
            if let Some(path) = &cli.common.out {
                if let Err(e) = fs::write(path, &text) {
                    eprintln!("error: {path}: {e}");
                    return ExitCode::from(2);
                }
            }
            match cli.common.format {
                Format::Json => println!("{text}"),
                Format::Table => print!("{}", out.table),
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Negative(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}
