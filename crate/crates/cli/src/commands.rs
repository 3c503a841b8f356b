//! Subcommand handlers. Each returns a [`Report`] or a [`CliError`].

use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use surfkit::beauville::{self, BeauvilleVerdict, GeneratingPair};
use surfkit::braid::{self, BraidWord, FreeWord};
use surfkit::dynkin::{self, AdeLabel, CurveConfig};
use surfkit::hurwitz::{self, Direction, Equivalence, Factorization, Move};
use surfkit::invariants::{self, BidoubleType, BoxBound};
use surfkit::orbifold::{self, GroupType, OrbifoldSignature};
use surfkit::permgroup::{self, Perm};

use crate::output::Report;
use crate::{BeauvilleCmd, BraidCmd, DynkinCmd, FactorizationInput, HurwitzCmd, InvCmd, OrbifoldCmd, PermCmd};

#[derive(Debug)]
pub enum CliError {
    /// Bad invocation or unreadable input file; exit 1.
    Usage(String),
    /// A library precondition failed; exit 2.
    Domain { name: &'static str, message: String },
}

impl CliError {
    pub fn name(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "Usage",
            CliError::Domain { name, .. } => name,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain { message: m, .. } => m,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain { .. } => 2,
        }
    }
}

macro_rules! domain_error {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Domain { name: e.name(), message: e.to_string() }
            }
        }
    )*};
}

domain_error!(
    permgroup::PermError,
    braid::BraidError,
    hurwitz::HurwitzError,
    orbifold::OrbifoldError,
    beauville::BeauvilleError,
    dynkin::DynkinError,
    invariants::InvariantError
);

type Result<T> = std::result::Result<T, CliError>;

fn invalid_input(message: impl Into<String>) -> CliError {
    CliError::Domain {
        name: "InvalidInput",
        message: message.into(),
    }
}

fn read_input(file: Option<&Path>) -> Result<String> {
    match file {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
            Ok(s)
        }
    }
}

fn read_json<T: DeserializeOwned>(file: Option<&Path>) -> Result<T> {
    let text = read_input(file)?;
    serde_json::from_str(&text).map_err(|e| invalid_input(e.to_string()))
}

fn read_factorization(input: &FactorizationInput) -> Result<Factorization> {
    read_json(input.file.as_deref())
}

/// Largest point mentioned in a cycle string; the degree used when none is given.
fn max_point(text: &str) -> usize {
    text.split(|c: char| !c.is_ascii_digit())
        .filter_map(|t| t.parse::<usize>().ok())
        .max()
        .unwrap_or(1)
}

/// Parses each text as `"n:(..)"` or bare cycles. Bare cycles share one degree:
/// the given one, or the largest point across all texts.
fn parse_perms(texts: &[&str], degree: Option<usize>) -> Result<Vec<Perm>> {
    let inferred = degree.unwrap_or_else(|| {
        texts
            .iter()
            .filter(|t| !t.contains(':'))
            .map(|t| max_point(t))
            .max()
            .unwrap_or(1)
    });
    texts
        .iter()
        .map(|t| {
            if t.contains(':') {
                Ok(t.parse::<Perm>()?)
            } else {
                Ok(Perm::parse_cycles(t, inferred)?)
            }
        })
        .collect()
}

fn parse_pair(a: &str, c: &str, degree: Option<usize>) -> Result<GeneratingPair> {
    let mut v = parse_perms(&[a, c], degree)?;
    let c = v.pop().unwrap();
    let a = v.pop().unwrap();
    Ok(GeneratingPair::new(a, c)?)
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

fn factorization_text(f: &Factorization) -> String {
    format!("[{}]", join(f.factors(), ", "))
}

fn path_text(path: &[Move]) -> String {
    if path.is_empty() {
        return "(empty)".into();
    }
    let words: Vec<String> = path
        .iter()
        .map(|m| match m.dir {
            Direction::Forward => format!("f{}", m.i),
            Direction::Backward => format!("b{}", m.i),
        })
        .collect();
    words.join(" ")
}

pub fn perm(cmd: PermCmd) -> Result<Report> {
    match cmd {
        PermCmd::Info { perm, degree } => {
            let p = parse_perms(&[&perm], degree)?.remove(0);
            let data = json!({
                "perm": p,
                "order": p.order(),
                "cycle_type": p.cycle_type(),
                "inverse": p.inverse(),
            });
            let text = format!(
                "{p}\ndegree {}, order {}, cycle type {:?}\ninverse {}",
                p.degree(),
                p.order(),
                p.cycle_type(),
                p.inverse()
            );
            Ok(Report::new(&data, text))
        }
        PermCmd::Compose { p, q, degree } => {
            let v = parse_perms(&[&p, &q], degree)?;
            let r = v[0].compose(&v[1])?;
            Ok(Report::new(&r, r.to_string()))
        }
        PermCmd::Closure {
            generators,
            degree,
            cap,
            elements,
        } => {
            let texts: Vec<&str> = generators.iter().map(String::as_str).collect();
            let gens = parse_perms(&texts, degree)?;
            let group = permgroup::generate(&gens, cap)?;
            let mut text = format!("order {}", group.len());
            if elements {
                for g in &group {
                    write!(text, "\n{g}").unwrap();
                }
                Ok(Report::new(&json!({"order": group.len(), "elements": group}), text))
            } else {
                Ok(Report::new(&json!({"order": group.len()}), text))
            }
        }
        PermCmd::Conjugator {
            a,
            c,
            a2,
            c2,
            degree,
            bound,
        } => {
            let v = parse_perms(&[&a, &c, &a2, &c2], degree)?;
            let found = permgroup::pair_conjugator(&v[0], &v[1], &v[2], &v[3], bound)?;
            Ok(Report::new(&found, conjugator_text(&found)))
        }
    }
}

fn conjugator_text(found: &permgroup::ConjugatorSearch) -> String {
    let mut text = match &found.witness {
        Some(g) => format!("witness {g}"),
        None => "no conjugator".to_string(),
    };
    if found.outer_automorphism_caveat {
        text.push_str("\nnote: degree 6 admits outer automorphisms, which were not searched");
    }
    text
}

pub fn braid(cmd: BraidCmd) -> Result<Report> {
    match cmd {
        BraidCmd::Act { strands, braid, word } => {
            let b = BraidWord::parse(&braid, strands)?;
            let w = FreeWord::parse(&word, strands)?;
            let image = braid::artin_apply(&b, &w)?;
            let s = image.to_string();
            Ok(Report::new(&json!({"image": s}), s))
        }
        BraidCmd::Equal { strands, left, right } => {
            let eq = braid::braid_equal(&BraidWord::parse(&left, strands)?, &BraidWord::parse(&right, strands)?)?;
            Ok(Report::new(&json!({"equal": eq}), eq.to_string()))
        }
        BraidCmd::Perm { strands, braid } => {
            let p = braid::braid_to_perm(&BraidWord::parse(&braid, strands)?);
            Ok(Report::new(&p, p.to_string()))
        }
        BraidCmd::Twist { strands } => {
            let b = braid::full_twist(strands)?;
            Ok(Report::new(
                &json!({"strands": strands, "word": b.to_string()}),
                b.to_string(),
            ))
        }
        BraidCmd::Chain { n } => {
            let b = braid::coxeter_chain(n)?;
            Ok(Report::new(
                &json!({"strands": b.strands(), "word": b.to_string()}),
                b.to_string(),
            ))
        }
    }
}

/// A move path together with both endpoints, so it can be re-executed later.
#[derive(Serialize, serde::Deserialize)]
struct ReplayRecord {
    start: Factorization,
    path: Vec<Move>,
    end: Factorization,
}

pub fn hurwitz(cmd: HurwitzCmd) -> Result<Report> {
    match cmd {
        HurwitzCmd::Orbit {
            input,
            cap,
            mod_conjugation,
        } => {
            let f = read_factorization(&input)?;
            let report = hurwitz::orbit(&f, cap, mod_conjugation);
            let mut text = format!(
                "orbit size {}{}",
                report.size,
                if report.exhausted {
                    " (exhausted)"
                } else {
                    " (cap reached)"
                }
            );
            if mod_conjugation {
                text.push_str(", up to simultaneous conjugation");
            }
            let s = &report.invariant_summary;
            write!(text, "\nproduct {}\ncycle types {:?}", s.product, s.cycle_types).unwrap();
            match s.subgroup_order {
                Some(n) => write!(text, "\nsubgroup order {n}").unwrap(),
                None => text.push_str("\nsubgroup order unknown (cap exceeded)"),
            }
            for r in &report.representatives {
                write!(text, "\n  {}", factorization_text(r)).unwrap();
            }
            Ok(Report::new(&report, text))
        }
        HurwitzCmd::Move { input, i, dir } => {
            let f = read_factorization(&input)?;
            let dir = match dir.as_str() {
                "f" | "forward" => Direction::Forward,
                "b" | "backward" => Direction::Backward,
                other => return Err(CliError::Usage(format!("direction must be f or b, got {other:?}"))),
            };
            let g = hurwitz::hurwitz_move(&f, i, dir)?;
            Ok(Report::new(&g, factorization_text(&g)))
        }
        HurwitzCmd::Equiv { input, other, cap } => {
            let f = read_factorization(&input)?;
            let g: Factorization = read_json(Some(&other))?;
            let verdict = hurwitz::equivalent(&f, &g, cap)?;
            let text = match &verdict {
                Equivalence::Yes(path) => format!("equivalent\npath {}", path_text(path)),
                Equivalence::No => "not equivalent".to_string(),
                Equivalence::Unknown => "unknown (cap reached)".to_string(),
            };
            Ok(Report::new(&verdict, text))
        }
        HurwitzCmd::Auroux { input, h } => {
            let f = read_factorization(&input)?;
            let path = hurwitz::auroux_path(&f, h)?;
            let start = hurwitz::simultaneous_conjugate(&f, &f.factors()[h - 1])?;
            let text = format!(
                "start {}\npath ({} moves) {}\nend {}",
                factorization_text(&start),
                path.len(),
                path_text(&path),
                factorization_text(&f)
            );
            let record = ReplayRecord { start, path, end: f };
            Ok(Report::new(&record, text))
        }
        HurwitzCmd::Replay { input } => {
            let record: ReplayRecord = read_json(input.file.as_deref())?;
            let reached = hurwitz::apply_path(&record.start, &record.path)?;
            if reached != record.end {
                return Err(hurwitz::HurwitzError::ReplayFailed.into());
            }
            let text = format!("replay ok: {} moves", record.path.len());
            Ok(Report::new(&json!({"ok": true, "moves": record.path.len()}), text))
        }
    }
}

fn parse_signature(text: &str) -> Result<OrbifoldSignature> {
    Ok(text.parse::<OrbifoldSignature>()?)
}

pub fn orbifold(cmd: OrbifoldCmd) -> Result<Report> {
    match cmd {
        OrbifoldCmd::Classify { m1, m2, m3 } => {
            let kind = orbifold::classify_triangle(m1, m2, m3)?;
            if kind == GroupType::Elliptic {
                let order = orbifold::elliptic_order(m1, m2, m3)?;
                Ok(Report::new(
                    &json!({"type": kind, "order": order}),
                    format!("{kind}, order {order}"),
                ))
            } else {
                Ok(Report::new(&json!({"type": kind, "order": null}), kind.to_string()))
            }
        }
        OrbifoldCmd::Euler { signature } => {
            let sig = parse_signature(&signature)?;
            let e = orbifold::orbifold_euler(&sig).to_string();
            Ok(Report::new(&json!({"signature": sig.to_string(), "euler": e}), e))
        }
        OrbifoldCmd::Genus { signature, order } => {
            let sig = parse_signature(&signature)?;
            let g = orbifold::cover_genus(&sig, order)?;
            Ok(Report::new(
                &json!({"signature": sig.to_string(), "group_order": order, "genus": g}),
                format!("genus {g}"),
            ))
        }
        OrbifoldCmd::Isogenous { g1, g2, order } => {
            let inv = orbifold::isogenous_invariants(g1, g2, order)?;
            Ok(Report::new(
                &inv,
                format!("e = {}, chi = {}, K^2 = {}", inv.e, inv.chi, inv.k2),
            ))
        }
        OrbifoldCmd::ZeuthenSegre { g, b } => {
            let bound = orbifold::zeuthen_segre_bound(g, b);
            Ok(Report::new(&json!({"bound": bound}), bound.to_string()))
        }
        OrbifoldCmd::Pencil { e_x, e_y, e_z, dim } => {
            let n = orbifold::pencil_singular_fibres(e_x, e_y, e_z, dim);
            Ok(Report::new(&json!({"singular_fibres": n}), n.to_string()))
        }
    }
}

fn symmetric_group(n: usize) -> Result<permgroup::ElementSet> {
    let mut gens = vec![Perm::long_cycle(n)];
    if n >= 2 {
        gens.push(Perm::transposition(n, 1, 2)?);
    }
    Ok(permgroup::generate(&gens, usize::MAX)?)
}

fn verdict_text(v: &BeauvilleVerdict) -> String {
    match v {
        BeauvilleVerdict::Certificate(c) => format!(
            "Beauville structure: |G| = {}, |Σ1| = {}, |Σ2| = {}\npair 1: a = {}, b = {}, c = {}\npair 2: a = {}, b = {}, c = {}",
            c.group_order,
            c.sigma1_size,
            c.sigma2_size,
            c.pair1.a(),
            c.pair1.b(),
            c.pair1.c(),
            c.pair2.a(),
            c.pair2.b(),
            c.pair2.c()
        ),
        BeauvilleVerdict::Failure { check, checks } => format!(
            "not a Beauville structure: {check:?} failed (generation1 {}, generation2 {}, disjointness {})",
            checks.generation1, checks.generation2, checks.disjointness
        ),
    }
}

pub fn beauville(cmd: BeauvilleCmd) -> Result<Report> {
    match cmd {
        BeauvilleCmd::Check {
            group,
            a,
            c,
            a2,
            c2,
            cap,
        } => {
            let sym_degree = match group.strip_prefix(['s', 'S']) {
                Some(n) => Some(
                    n.parse::<usize>()
                        .map_err(|_| CliError::Usage(format!("bad group {group:?}; use sN or generated")))?,
                ),
                None if group == "generated" => None,
                None => return Err(CliError::Usage(format!("bad group {group:?}; use sN or generated"))),
            };
            let v = parse_perms(&[&a, &c, &a2, &c2], sym_degree)?;
            let pair1 = GeneratingPair::new(v[0].clone(), v[1].clone())?;
            let pair2 = GeneratingPair::new(v[2].clone(), v[3].clone())?;
            let g = match sym_degree {
                Some(n) => symmetric_group(n)?,
                None => permgroup::generate(&v, cap)?,
            };
            let verdict = beauville::is_beauville(&pair1, &pair2, &g)?;
            Ok(Report::new(&verdict, verdict_text(&verdict)))
        }
        BeauvilleCmd::Search { n, bound } => {
            let found = beauville::search_abelian(n, bound)?;
            let mut text = format!("{} structure(s) on (Z/{n})^2", found.len());
            for c in &found {
                write!(text, "\n  a' = {}, c' = {}", c.pair2.a(), c.pair2.c()).unwrap();
            }
            Ok(Report::new(&found, text))
        }
        BeauvilleCmd::Witness { a, c, degree, bound } => {
            let pair = parse_pair(&a, &c, degree)?;
            let found = beauville::inverting_witness(&pair, bound)?;
            Ok(Report::new(&found, conjugator_text(&found)))
        }
        BeauvilleCmd::Orders { a, c, degree } => {
            let pair = parse_pair(&a, &c, degree)?;
            let (oa, ob, oc) = beauville::orders_triple(&pair);
            Ok(Report::new(
                &json!({"a": oa, "b": ob, "c": oc, "b_perm": pair.b()}),
                format!("({oa}, {ob}, {oc})\nb = {}", pair.b()),
            ))
        }
    }
}

pub fn dynkin(cmd: DynkinCmd) -> Result<Report> {
    match cmd {
        DynkinCmd::Classify { file, label } => {
            let cfg = match label {
                Some(l) => CurveConfig::from_label(l.parse::<AdeLabel>()?)?,
                None => read_json::<CurveConfig>(file.as_deref())?,
            };
            classify_report(&cfg)
        }
        DynkinCmd::Rdp { label } => {
            let data = dynkin::rdp_data(label.parse()?)?;
            let text = format!(
                "{}: {}, Milnor number {}, Aut {}",
                data.label, data.equation, data.milnor_number, data.aut_group
            );
            Ok(Report::new(&data, text))
        }
    }
}

fn classify_report(cfg: &CurveConfig) -> Result<Report> {
    match dynkin::classify(cfg) {
        Ok(label) => {
            let z = dynkin::fundamental_cycle(cfg)?;
            let rdp = dynkin::rdp_data(label)?;
            let (ext, node) = dynkin::extend(cfg)?;
            let divisor = dynkin::elliptic_divisor(&ext)?;
            let data = json!({
                "ade": true,
                "label": label,
                "fundamental_cycle": z.coefficients,
                "rdp": rdp,
                "extended": {
                    "label": dynkin::classify_extended(&ext),
                    "config": ext,
                    "new_curve": node,
                    "elliptic_divisor": divisor.coefficients,
                },
            });
            let text = format!(
                "{label}\nfundamental cycle {z}\n{}, Milnor number {}, Aut {}\nextended by curve {node}: elliptic divisor {divisor}",
                rdp.equation, rdp.milnor_number, rdp.aut_group
            );
            Ok(Report::new(&data, text))
        }
        Err(not_ade) => {
            let ext = dynkin::classify_extended(cfg);
            let divisor = if ext.is_some() {
                Some(dynkin::elliptic_divisor(cfg)?)
            } else {
                None
            };
            let mut text = format!("not ADE: {not_ade}");
            if let (Some(l), Some(d)) = (ext, &divisor) {
                write!(text, "\nextended {l}, elliptic divisor {d}").unwrap();
            }
            let data = json!({
                "ade": false,
                "reason": not_ade,
                "extended": ext,
                "elliptic_divisor": divisor.map(|d| d.coefficients),
            });
            Ok(Report::new(&data, text))
        }
    }
}

fn surface_text(s: &invariants::SurfaceInvariants) -> String {
    let r = s.r.map_or("unknown".to_string(), |r| r.to_string());
    format!(
        "chi = {}, p_g = {}, K^2 = {}, e = {}, sigma = {}, r = {r}, simply connected: {}",
        s.chi, s.p_g, s.k2, s.e, s.sigma, s.simply_connected
    )
}

pub fn inv(cmd: InvCmd) -> Result<Report> {
    match cmd {
        InvCmd::Bidouble { a, b, c, d } => {
            let s = invariants::bidouble_invariants(BidoubleType::new(a, b, c, d))?;
            Ok(Report::new(&s, surface_text(&s)))
        }
        InvCmd::Abc { a, b, c } => {
            let x = invariants::abc_invariants(a, b, c)?;
            let s = &x.surface;
            // Flattened so that the CSV form is a single row of scalars.
            let data = json!({
                "a": a, "b": b, "c": c,
                "chi": s.chi, "p_g": s.p_g, "k2": s.k2, "e": s.e, "sigma": s.sigma,
                "r": s.r, "simply_connected": s.simply_connected,
                "moduli_dimension": x.moduli_dimension,
                "moduli_dimension_valid": x.moduli_dimension_valid,
            });
            let text = format!(
                "{}\nmoduli dimension {}{}",
                surface_text(s),
                x.moduli_dimension,
                if x.moduli_dimension_valid {
                    ""
                } else {
                    " (outside the range where it applies)"
                }
            );
            Ok(Report::new(&data, text))
        }
        InvCmd::Manetti { a, b, n } => {
            let s = invariants::manetti_invariants(a, b, n)?;
            Ok(Report::new(&s, surface_text(&s)))
        }
        InvCmd::Box { h, bound, max_exponent } => {
            let family = invariants::box_family(
                h,
                BoxBound {
                    max_exponent,
                    max_scale: bound,
                },
            )?;
            let rows: Vec<_> = family
                .iter()
                .map(|t| -> Result<_> {
                    let s = invariants::bidouble_invariants(*t)?;
                    Ok(json!({
                        "a": t.a, "b": t.b, "c": t.c, "d": t.d,
                        "chi": s.chi, "k2": s.k2, "r": s.r,
                    }))
                })
                .collect::<Result<_>>()?;
            let mut text = format!("{h} homeomorphic, pairwise non-diffeomorphic bidouble covers:");
            for (t, row) in family.iter().zip(&rows) {
                write!(
                    text,
                    "\n  {t}  chi = {}, K^2 = {}, r = {}",
                    row["chi"], row["k2"], row["r"]
                )
                .unwrap();
            }
            Ok(Report::new(&rows, text))
        }
        InvCmd::Nondef { a, b, c, k } => {
            let r = invariants::nondef_hypotheses(a, b, c, k);
            let text = format!(
                "{}\n(i) {}  (ii) {}  (iii) {}  (iv1) {}  (iv2) {}",
                if r.holds { "hypotheses hold" } else { "hypotheses fail" },
                r.clause_i,
                r.clause_ii,
                r.clause_iii,
                r.clause_iv1,
                r.clause_iv2
            );
            Ok(Report::new(&r, text))
        }
        InvCmd::Plurigenus {
            chi,
            k2,
            m,
            five_canonical,
        } => {
            let v = if five_canonical {
                invariants::hilbert_5canonical(chi, k2, m)?
            } else {
                invariants::plurigenus(chi, k2, m)?
            };
            Ok(Report::new(&json!({"value": v}), v.to_string()))
        }
    }
}
