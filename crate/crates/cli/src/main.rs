use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;
use ybe::complexes::{split, split_homology, AlphaBeta, BoundaryModel, Side, TEST_PAIRS};
use ybe::complexes::{check_classical_cubical, check_precubical, check_semi_strong, conjugate_by_guitar};
use ybe::complexes::{cycle_set_complex, lnd_complex};
use ybe::extensions::{
    count_extension_classes, extend, extension_classes, is_2cocycle, is_lnd_2cocycle, is_star_2cocycle,
    nu_relation_check, omega_coboundary_check, Cochain2, COCHAIN_BUDGET,
};
use ybe::fixtures;
use ybe::guitar::{barj_identities, check_entwine, check_guitar_cocycle_all, chi, chi_prime, guitar};
use ybe::homology::{cohomology_groups, homology_at, orbits, FiniteAbelianGroup};
use ybe::io::{read_document, to_value, Document};
use ybe::multipermutation::{
    is_square_free, mp_level, nm_table, retraction, search_cycle_sets, EnumerationConfig, DEFAULT_BUDGET,
};
use ybe::structures::{BraidedSet, CycleSet, LeftModule, RightModule, ShelfVariant};
use ybe::{suites, tuples, CheckReport, Error};

#[derive(Parser)]
#[command(name = "ybe", about = "Finite left non-degenerate solutions of the Yang-Baxter equation")]
struct Cli {
    /// Render records as `key=value` lines instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Birack,
    Braided,
    Star,
    Cycleset,
}

#[derive(Clone, Copy, ValueEnum)]
enum Coefficients {
    Trivial,
    Adjoint,
}

#[derive(Clone, Copy, ValueEnum)]
enum Degen {
    Coefficient,
    Plain,
}

/// INPUT arguments are file paths or `fixture:NAME` for a built-in structure.
#[derive(Subcommand)]
enum Command {
    /// Validate a JSON document and classify it.
    Verify {
        input: String,
        /// Braided set a module document acts on.
        #[arg(long)]
        base: Option<String>,
    },
    /// Print structural data: properties, orbits, MP level.
    Info { input: String },
    /// Apply the guitar map to a tuple, or run the identity suites with --check.
    Guitar {
        input: String,
        #[arg(long, value_delimiter = ',')]
        tuple: Vec<usize>,
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
    },
    Homology {
        input: String,
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        alpha: i64,
        #[arg(long, default_value_t = -1, allow_hyphen_values = true)]
        beta: i64,
        #[arg(long, value_enum, default_value = "birack")]
        family: Family,
        #[arg(long, value_enum, default_value = "trivial")]
        coefficients: Coefficients,
    },
    /// H^1 or H^2 of a cycle set with coefficients in ∏ Z/k_i.
    Cohomology {
        input: String,
        #[arg(long)]
        degree: usize,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        moduli: Vec<u64>,
    },
    /// Certify the degenerate/normalized splitting in degrees 1..=degree.
    Split {
        input: String,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, value_enum, default_value = "coefficient")]
        degeneracies: Degen,
    },
    /// Build the extension of a cycle set by a 2-cocycle.
    Extend { base: String, cochain: String },
    CocycleCheck {
        base: String,
        cochain: String,
        /// Check the star condition instead (braided bases).
        #[arg(long)]
        star: bool,
    },
    ExtClasses {
        input: String,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        moduli: Vec<u64>,
        /// Also emit one representative cocycle per class.
        #[arg(long)]
        list: bool,
    },
    /// Compare ν-relation and star-cocycle sets over all cochains.
    BridgeCheck {
        input: String,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        moduli: Vec<u64>,
    },
    Retract { input: String },
    MpLevel { input: String },
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        square_free: bool,
        #[arg(long)]
        up_to_iso: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    Nm {
        #[arg(long)]
        max_m: usize,
        /// Search larger sizes with a larger budget.
        #[arg(long)]
        extended: bool,
    },
    /// Run a named suite, or `all`.
    Suite { name: String },
}

struct Out {
    text: bool,
}

impl Out {
    fn emit(&self, v: Value) {
        if self.text {
            match v {
                Value::Object(map) => {
                    let parts: Vec<String> = map.iter().map(|(k, v)| format!("{k}={}", render(v))).collect();
                    println!("{}", parts.join(" "));
                }
                other => println!("{}", render(&other)),
            }
        } else {
            println!("{v}");
        }
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Failure that stops a command: usage/parse (exit 2) or mathematical violation (exit 1).
enum Fail {
    Usage(String),
    Violation(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Shape(_) | Error::Range(_) | Error::SizeMismatch(_) => Fail::Usage(e.to_string()),
            _ => Fail::Violation(e.to_string()),
        }
    }
}

type Res = std::result::Result<bool, Fail>;

fn load(input: &str) -> std::result::Result<Document, Fail> {
    if let Some(name) = input.strip_prefix("fixture:") {
        let f = fixtures::by_name(name)
            .ok_or_else(|| Fail::Usage(format!("unknown fixture {name}; known: {}", fixtures::names().join(", "))))?;
        return Ok(match f.cycle_set {
            Some(c) => Document::Cycle(c),
            None => Document::Braided(f.braided),
        });
    }
    let path = PathBuf::from(input);
    if !path.exists() {
        return Err(Fail::Usage(format!("{input}: no such file")));
    }
    Ok(read_document(&path)?)
}

fn braided_of(doc: &Document) -> std::result::Result<BraidedSet, Fail> {
    match doc {
        Document::Braided(b) => Ok(b.clone()),
        Document::Cycle(c) => Ok(BraidedSet::from_cycle_set(c)),
        Document::Shelf(s) => Ok(BraidedSet::from_shelf(s, ShelfVariant::Primal)),
        d => Err(Fail::Usage(format!("expected a braided set, cycle set or shelf, got {}", d.kind()))),
    }
}

fn cycle_of(doc: &Document) -> std::result::Result<CycleSet, Fail> {
    match doc {
        Document::Cycle(c) => Ok(c.clone()),
        d => Err(Fail::Usage(format!("expected a cycle_set, got {}", d.kind()))),
    }
}

fn cochain_of(doc: &Document) -> std::result::Result<Cochain2, Fail> {
    match doc {
        Document::Cochain(f) => Ok(f.clone()),
        d => Err(Fail::Usage(format!("expected a cochain2, got {}", d.kind()))),
    }
}

fn group(moduli: &[u64]) -> std::result::Result<FiniteAbelianGroup, Fail> {
    FiniteAbelianGroup::new(moduli.to_vec()).map_err(|e| Fail::Usage(e.to_string()))
}

fn report(out: &Out, name: &str, r: ybe::Result<CheckReport>) -> bool {
    match r {
        Ok(r) => {
            out.emit(json!({"check": name, "pass": r.passed, "checked": r.checked, "failure": r.failure}));
            r.passed
        }
        Err(e) => {
            out.emit(json!({"check": name, "pass": false, "error": e.to_string()}));
            false
        }
    }
}

fn verify(out: &Out, input: &str, base: Option<&str>) -> Res {
    // a violation inside the document is reported with its witness, not as a parse error
    let doc = match load(input) {
        Ok(d) => d,
        Err(Fail::Violation(msg)) => {
            out.emit(json!({"command": "verify", "pass": false, "violation": msg}));
            return Ok(false);
        }
        Err(e) => return Err(e),
    };
    let mut rec = json!({"command": "verify", "kind": doc.kind(), "pass": true});
    match &doc {
        Document::Braided(b) => {
            rec["classification"] = serde_json::to_value(b.classify()).unwrap();
        }
        Document::Cycle(c) => {
            let b = BraidedSet::from_cycle_set(c);
            rec["classification"] = serde_json::to_value(b.classify()).unwrap();
            rec["square_free"] = json!(is_square_free(c));
        }
        Document::Shelf(s) => {
            let rack = s.table().iter().all(|r| ybe::structures::is_permutation(r));
            rec["rack"] = json!(rack);
            rec["trivial"] = json!(s.is_trivial());
        }
        Document::RightModule { action, .. } | Document::LeftModule { action, .. } => {
            if let Some(base) = base {
                let b = braided_of(&load(base)?)?;
                let r = if matches!(doc, Document::RightModule { .. }) {
                    RightModule::new(&b, action.clone()).map(|_| ())
                } else {
                    LeftModule::new(&b, action.clone()).map(|_| ())
                };
                if let Err(e) = r {
                    match Fail::from(e) {
                        Fail::Violation(msg) => {
                            rec["pass"] = json!(false);
                            rec["violation"] = json!(msg);
                        }
                        usage => return Err(usage),
                    }
                }
            } else {
                rec["note"] = json!("shape only; pass --base to check compatibility");
            }
        }
        Document::Cochain(f) => {
            rec["base"] = json!(f.base);
            rec["group_order"] = json!(f.group.order());
        }
    }
    let pass = rec["pass"] == json!(true);
    out.emit(rec);
    Ok(pass)
}

fn info(out: &Out, input: &str) -> Res {
    let doc = load(input)?;
    let b = braided_of(&doc)?;
    let mut rec = json!({"kind": doc.kind(), "size": b.size(), "properties": b.classify()});
    if let Ok(s) = b.associated_shelf() {
        rec["associated_shelf"] = json!(s.table());
    }
    if let Document::Cycle(c) = &doc {
        rec["orbits"] = json!(orbits(c));
        rec["square_free"] = json!(is_square_free(c));
        if let Ok(r) = mp_level(c) {
            rec["mp"] = serde_json::to_value(r).unwrap();
        }
    }
    out.emit(rec);
    Ok(true)
}

fn guitar_cmd(out: &Out, input: &str, tuple: &[usize], check: bool, max_k: usize) -> Res {
    let b = braided_of(&load(input)?)?;
    if let Some(&x) = tuple.iter().find(|&&x| x >= b.size()) {
        return Err(Fail::Usage(format!("tuple entry {x} out of range")));
    }
    let mut pass = true;
    if !tuple.is_empty() || !check {
        out.emit(json!({"tuple": tuple, "guitar": guitar(&b, tuple)}));
    }
    if check {
        pass &= report(out, "entwining", check_entwine(&b, max_k));
        pass &= report(out, "guitar cocycle", Ok(check_guitar_cocycle_all(&b, max_k.min(3))));
        let mut chis = CheckReport { passed: true, checked: 0, failure: None };
        for k in 1..=max_k {
            for ys in tuples(b.size(), k) {
                for i in 1..=k {
                    let (l, r) = (chi(&b, i, &ys), chi_prime(&b, i, &ys));
                    chis.checked += 1;
                    if chis.passed && (l.is_err() || l != r) {
                        chis.passed = false;
                        chis.failure = Some(format!("χ_{i} != χ'_{i} on {ys:?}"));
                    }
                }
            }
        }
        pass &= report(out, "chi = chi'", Ok(chis));
        for (label, m, n) in [
            ("trivial", RightModule::trivial(b.size()), LeftModule::trivial(b.size())),
            ("adjoint", RightModule::adjoint(&b), LeftModule::adjoint(&b)),
        ] {
            pass &= report(out, &format!("conjugation ({label})"), conjugate_by_guitar(&b, &m, &n, max_k));
        }
        if b.is_invertible() && b.is_right_nondegenerate() && b.t_map().is_some() {
            pass &= report(out, "double and toss identities", barj_identities(&b));
        }
    }
    Ok(pass)
}

fn homology_cmd(
    out: &Out,
    input: &str,
    k: usize,
    ab: AlphaBeta,
    family: Family,
    coeff: Coefficients,
) -> Res {
    let doc = load(input)?;
    let cx = match family {
        Family::Cycleset => cycle_set_complex(&cycle_of(&doc)?, k + 1),
        Family::Star => {
            let b = braided_of(&doc)?;
            BoundaryModel::birack_star(&b)?.chain_complex(k + 1, ab)
        }
        Family::Birack | Family::Braided => {
            let b = braided_of(&doc)?;
            let (m, n) = match coeff {
                Coefficients::Trivial => (RightModule::trivial(b.size()), LeftModule::trivial(b.size())),
                Coefficients::Adjoint => (RightModule::adjoint(&b), LeftModule::adjoint(&b)),
            };
            let model = if matches!(family, Family::Birack) {
                BoundaryModel::birack(&b, &m, &n)?
            } else {
                BoundaryModel::braided(&b, &m, &n, Side::Left, Side::Right)?
            };
            model.chain_complex(k + 1, ab)
        }
    };
    let h = homology_at(&cx, k)?;
    out.emit(json!({"degree": h.degree, "betti": h.betti, "torsion": h.torsion}));
    Ok(true)
}

fn cohomology_cmd(out: &Out, input: &str, degree: usize, moduli: &[u64]) -> Res {
    let c = cycle_of(&load(input)?)?;
    let a = group(moduli)?;
    let r = cohomology_groups(&c, degree, &a)?;
    out.emit(json!({
        "degree": r.degree, "cocycles": r.cocycles.to_string(), "coboundaries": r.coboundaries.to_string(),
        "invariants": r.invariants, "order": r.order().to_string(),
    }));
    Ok(true)
}

fn split_cmd(out: &Out, input: &str, degree: usize, degen: Degen) -> Res {
    let b = braided_of(&load(input)?)?;
    let model = BoundaryModel::birack(&b, &RightModule::trivial(b.size()), &LeftModule::trivial(b.size()))?;
    let model = match degen {
        Degen::Coefficient => model.with_coefficient_degeneracies()?,
        Degen::Plain => model.with_plain_degeneracies()?,
    };
    let mut pass = true;
    for k in 1..=degree {
        let cert = split(&model, k, &TEST_PAIRS)?;
        pass &= cert.passed();
        out.emit(json!({
            "degree": k, "dim": cert.dim, "degenerate_rank": cert.degenerate.len(),
            "normalized_rank": cert.normalized_rank, "rank_additive": cert.rank_additive,
            "invariant": cert.invariant, "pass": cert.passed(),
        }));
    }
    for ab in TEST_PAIRS {
        let h = split_homology(&model, degree, ab)?;
        pass &= h.additive();
        out.emit(json!({
            "alpha": ab.alpha, "beta": ab.beta, "full": h.full, "degenerate": h.degenerate,
            "normalized": h.normalized, "additive": h.additive(),
        }));
    }
    Ok(pass)
}

fn extend_cmd(out: &Out, base: &str, cochain: &str) -> Res {
    let c = cycle_of(&load(base)?)?;
    let f = cochain_of(&load(cochain)?)?;
    let e = extend(&c, &f)?;
    let mut rec = to_value(&Document::Cycle(e.total.clone()));
    rec["projection"] = json!(e.projection);
    out.emit(rec);
    Ok(true)
}

fn cocycle_check_cmd(out: &Out, base: &str, cochain: &str, star: bool) -> Res {
    let doc = load(base)?;
    let f = cochain_of(&load(cochain)?)?;
    let ok = match (&doc, star) {
        (Document::Cycle(c), false) => is_2cocycle(c, &f)?,
        (_, false) => is_lnd_2cocycle(&braided_of(&doc)?, &f)?,
        (_, true) => is_star_2cocycle(&braided_of(&doc)?, &f)?,
    };
    out.emit(json!({"cocycle": ok, "star": star}));
    Ok(ok)
}

fn ext_classes_cmd(out: &Out, input: &str, moduli: &[u64], list: bool) -> Res {
    let c = cycle_of(&load(input)?)?;
    let a = group(moduli)?;
    if list {
        for f in extension_classes(&c, &a)? {
            out.emit(to_value(&Document::Cochain(f)));
        }
    }
    let k = count_extension_classes(&c, &a)?;
    let h2 = cohomology_groups(&c, 2, &a)?;
    let ok = k as u128 == h2.order();
    out.emit(json!({"classes": k, "h2_order": h2.order().to_string(), "h2_invariants": h2.invariants, "equal": ok}));
    Ok(ok)
}

fn bridge_cmd(out: &Out, input: &str, moduli: &[u64]) -> Res {
    let b = braided_of(&load(input)?)?;
    let a = group(moduli)?;
    let n = b.size();
    let total = (a.order() as u128).checked_pow((n * n) as u32).filter(|&t| t <= COCHAIN_BUDGET);
    let total = total.ok_or_else(|| Fail::from(Error::TooLarge(format!("|A|^{} cochains", n * n))))?;
    let mut agree = 0u128;
    let mut star = 0u128;
    let mut witness = None;
    for i in 0..total {
        let f = Cochain2::from_index(n, &a, i);
        let (l, r) = (nu_relation_check(&b, &f)?, is_star_2cocycle(&b, &f)?);
        if l == r {
            agree += 1;
        } else if witness.is_none() {
            witness = Some(to_value(&Document::Cochain(f)));
        }
        star += u128::from(r);
    }
    let mut omega = true;
    for g in tuples(a.order(), n) {
        omega &= omega_coboundary_check(&b, &a, &g)?;
    }
    let pass = agree == total && omega;
    out.emit(json!({
        "cochains": total.to_string(), "star_cocycles": star.to_string(), "agree": agree == total,
        "omega_coboundary": omega, "witness": witness,
    }));
    Ok(pass)
}

fn retract_cmd(out: &Out, input: &str) -> Res {
    let c = cycle_of(&load(input)?)?;
    let r = retraction(&c)?;
    let mut rec = to_value(&Document::Cycle(r.quotient.clone()));
    rec["projection"] = json!(r.projection);
    out.emit(rec);
    Ok(true)
}

fn mp_level_cmd(out: &Out, input: &str) -> Res {
    let c = cycle_of(&load(input)?)?;
    out.emit(serde_json::to_value(mp_level(&c)?).unwrap());
    Ok(true)
}

fn enumerate_cmd(out: &Out, cfg: EnumerationConfig) -> Res {
    let count = std::sync::atomic::AtomicUsize::new(0);
    let lock = std::sync::Mutex::new(());
    // streamed as found; the final order depends on scheduling unless up to iso
    let (complete, nodes) = if cfg.up_to_iso {
        let e = ybe::multipermutation::enumerate_partial(cfg)?;
        for c in &e.sets {
            out.emit(to_value(&Document::Cycle(c.clone())));
        }
        count.store(e.sets.len(), std::sync::atomic::Ordering::Relaxed);
        (e.complete, e.nodes)
    } else {
        search_cycle_sets(cfg, &|c| {
            let _g = lock.lock().unwrap();
            out.emit(to_value(&Document::Cycle(c)));
            count.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            true
        })?
    };
    out.emit(json!({"size": cfg.size, "count": count.into_inner(), "complete": complete, "nodes": nodes}));
    if !complete {
        return Err(Fail::Violation(Error::BudgetExceeded.to_string()));
    }
    Ok(true)
}

fn nm_cmd(out: &Out, max_m: usize, extended: bool) -> Res {
    let (max_size, budget) = if extended { (10, 20 * DEFAULT_BUDGET) } else { (6, DEFAULT_BUDGET) };
    if max_m > 4 && !extended {
        return Err(Fail::Usage("max-m above 4 needs --extended".into()));
    }
    let t = nm_table(max_m, max_size, budget)?;
    if out.text {
        print!("{}", ybe::multipermutation::format_nm_table(&t));
    } else {
        for (m, n) in &t.entries {
            out.emit(json!({"m": m, "N": n}));
        }
    }
    out.emit(json!({"largest_complete_size": t.largest_complete_size, "doubling_bound_holds": t.doubling_bound_holds}));
    Ok(t.entries.iter().all(|e| e.1.is_some()) && t.doubling_bound_holds)
}

fn suite_cmd(out: &Out, name: &str) -> Res {
    let names: Vec<&str> = if name == "all" {
        suites::SUITE_NAMES.to_vec()
    } else if suites::SUITE_NAMES.contains(&name) {
        vec![name]
    } else {
        return Err(Fail::Usage(format!("unknown suite {name}; known: all, {}", suites::SUITE_NAMES.join(", "))));
    };
    // run concurrently, report in name order
    let reports: Vec<suites::SuiteReport> = std::thread::scope(|s| {
        let handles: Vec<_> = names.iter().map(|n| s.spawn(move || suites::run(n).unwrap())).collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut pass = true;
    for r in reports {
        pass &= r.passed;
        out.emit(serde_json::to_value(&r).unwrap());
    }
    Ok(pass)
}

fn precubical_checks(out: &Out, b: &BraidedSet) -> bool {
    let Ok(model) = BoundaryModel::birack(b, &RightModule::trivial(b.size()), &LeftModule::trivial(b.size())) else {
        return true;
    };
    let mut pass = report(out, "precubical", Ok(check_precubical(&model, 3)));
    if let Ok(m) = model.clone().with_coefficient_degeneracies() {
        pass &= report(out, "semi-strong skew cubical", check_semi_strong(&m, 3));
        let c = check_classical_cubical(&m, 3);
        out.emit(json!({"check": "classical cubical (informational)", "pass": c.as_ref().map(|r| r.passed).unwrap_or(false)}));
    }
    for ab in TEST_PAIRS {
        let ok = model.chain_complex(3, ab).is_complex();
        pass &= ok;
        out.emit(json!({"check": "boundary squares to zero", "alpha": ab.alpha, "beta": ab.beta, "pass": ok}));
    }
    if let Ok(c) = lnd_complex(b, 3, false) {
        let ok = c.is_complex();
        pass &= ok;
        out.emit(json!({"check": "lnd complex squares to zero", "pass": ok}));
    }
    pass
}

fn run(cli: &Cli, out: &Out) -> Res {
    match &cli.command {
        Command::Verify { input, base } => {
            let pass = verify(out, input, base.as_deref())?;
            if pass {
                if let Ok(doc) = load(input) {
                    if let Ok(b) = braided_of(&doc) {
                        if b.is_left_nondegenerate() {
                            return Ok(precubical_checks(out, &b));
                        }
                    }
                }
            }
            Ok(pass)
        }
        Command::Info { input } => info(out, input),
        Command::Guitar { input, tuple, check, max_k } => guitar_cmd(out, input, tuple, *check, *max_k),
        Command::Homology { input, degree, alpha, beta, family, coefficients } => {
            homology_cmd(out, input, *degree, AlphaBeta::new(*alpha, *beta), *family, *coefficients)
        }
        Command::Cohomology { input, degree, moduli } => cohomology_cmd(out, input, *degree, moduli),
        Command::Split { input, degree, degeneracies } => split_cmd(out, input, *degree, *degeneracies),
        Command::Extend { base, cochain } => extend_cmd(out, base, cochain),
        Command::CocycleCheck { base, cochain, star } => cocycle_check_cmd(out, base, cochain, *star),
        Command::ExtClasses { input, moduli, list } => ext_classes_cmd(out, input, moduli, *list),
        Command::BridgeCheck { input, moduli } => bridge_cmd(out, input, moduli),
        Command::Retract { input } => retract_cmd(out, input),
        Command::MpLevel { input } => mp_level_cmd(out, input),
        Command::Enumerate { size, square_free, up_to_iso, budget } => enumerate_cmd(
            out,
            EnumerationConfig { size: *size, square_free: *square_free, up_to_iso: *up_to_iso, budget: *budget },
        ),
        Command::Nm { max_m, extended } => nm_cmd(out, *max_m, *extended),
        Command::Suite { name } => suite_cmd(out, name),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Verify { .. } => "verify",
        Command::Info { .. } => "info",
        Command::Guitar { .. } => "guitar",
        Command::Homology { .. } => "homology",
        Command::Cohomology { .. } => "cohomology",
        Command::Split { .. } => "split",
        Command::Extend { .. } => "extend",
        Command::CocycleCheck { .. } => "cocycle-check",
        Command::ExtClasses { .. } => "ext-classes",
        Command::BridgeCheck { .. } => "bridge-check",
        Command::Retract { .. } => "retract",
        Command::MpLevel { .. } => "mp-level",
        Command::Enumerate { .. } => "enumerate",
        Command::Nm { .. } => "nm",
        Command::Suite { .. } => "suite",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Out { text: cli.text };
    let name = command_name(&cli.command);
    let (code, error) = match run(&cli, &out) {
        Ok(true) => (0u8, None),
        Ok(false) => (1, None),
        Err(Fail::Violation(m)) => (1, Some(m)),
        Err(Fail::Usage(m)) => (2, Some(m)),
    };
    out.emit(json!({"summary": {"command": name, "pass": code == 0, "exit_code": code, "error": error}}));
    ExitCode::from(code)
}
