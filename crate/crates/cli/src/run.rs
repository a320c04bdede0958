use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};
use stonework::boolalg::{
    analyze_morphism, check_duality, epi_mono_factor, hom, llpo_split, minimal_join_witness, separate_closed,
    spectrum, wlpo_counterexample, BoolAlgError, FinBoolAlg, Presentation, Term,
};
use stonework::cap::{Cap, CapExceeded};
use stonework::interval::{
    circle_tower, complement_closed_union, complement_open_union, decidable_image, interval_tower, BitWord,
    IntervalError, IntervalUnion,
};
use stonework::profinite::{
    spectrum_tower, truncation_tower, CountablePresentation, GeneratorSupply, ProfiniteError, RelationFamily,
};
use stonework::syntax::{parse_term, Document, ParseError, SyntaxError};
use stonework::zhomology::{circle_cohomology, interval_cohomology, stabilization_report, HomologyError};

use crate::command::{Command, Space};
use crate::report::{digest, Report, Status};

/// Why a command produced no result.
#[derive(Debug)]
enum Failure {
    Input(String),
    Cap(CapExceeded),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Failure {
        Failure::Input(e.to_string())
    }
}

impl From<BoolAlgError> for Failure {
    fn from(e: BoolAlgError) -> Failure {
        match e {
            BoolAlgError::CapExceeded(c) => Failure::Cap(c),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<SyntaxError> for Failure {
    fn from(e: SyntaxError) -> Failure {
        match e {
            SyntaxError::Algebra(a) => a.into(),
            SyntaxError::Parse(p) => p.into(),
        }
    }
}

impl From<ProfiniteError> for Failure {
    fn from(e: ProfiniteError) -> Failure {
        match e {
            ProfiniteError::CapExceeded(c) => Failure::Cap(c),
            ProfiniteError::Algebra(a) => a.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<IntervalError> for Failure {
    fn from(e: IntervalError) -> Failure {
        match e {
            IntervalError::CapExceeded(c) => Failure::Cap(c),
            IntervalError::Graph(g) => g.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<HomologyError> for Failure {
    fn from(e: HomologyError) -> Failure {
        match e {
            HomologyError::CapExceeded(c) => Failure::Cap(c),
            other => Failure::Input(other.to_string()),
        }
    }
}

#[derive(Default)]
struct Outcome {
    checks: BTreeMap<String, bool>,
    result: Value,
}

impl Outcome {
    fn new(result: impl Serialize) -> Outcome {
        Outcome { checks: BTreeMap::new(), result: serde_json::to_value(result).expect("results serialize") }
    }

    fn check(mut self, name: &str, ok: bool) -> Outcome {
        self.checks.insert(name.to_string(), ok);
        self
    }
}

/// Runs `cmd` with the cap taken from the environment.
pub fn run(cmd: &Command) -> (i32, Report) {
    run_with_cap(cmd, Cap::from_env())
}

pub fn run_with_cap(cmd: &Command, cap: Cap) -> (i32, Report) {
    let mut report = Report {
        command: cmd.clone(),
        input_digest: digest(serde_json::to_string(cmd).expect("commands serialize").as_bytes()),
        status: Status::Ok,
        checks: BTreeMap::new(),
        result: Value::Null,
        error: None,
    };
    let input = match cmd.file() {
        Some(path) => match std::fs::read(path) {
            Ok(bytes) => {
                report.input_digest = digest(&bytes);
                String::from_utf8(bytes).map_err(|_| Failure::Input(format!("{} is not UTF-8", path.display())))
            }
            Err(e) => Err(Failure::Input(format!("{}: {e}", path.display()))),
        },
        None => Ok(String::new()),
    };
    let outcome = cmd
        .validate()
        .map_err(Failure::Input)
        .and_then(|()| input)
        .and_then(|text| dispatch(cmd, &text, cap));
    match outcome {
        Ok(o) => {
            report.status = if o.checks.values().all(|b| *b) { Status::Ok } else { Status::PropertyFailed };
            report.checks = o.checks;
            report.result = o.result;
        }
        Err(Failure::Input(msg)) => {
            report.status = Status::InputError;
            report.error = Some(msg);
        }
        Err(Failure::Cap(c)) => {
            report.status = Status::CapExceeded;
            report.error = Some(c.to_string());
        }
    }
    (report.status.exit_code(), report)
}

fn dispatch(cmd: &Command, text: &str, cap: Cap) -> Result<Outcome, Failure> {
    match cmd {
        Command::Spectrum { .. } => run_spectrum(text, cap),
        Command::Duality { .. } => run_duality(text, cap),
        Command::Morphism { .. } => run_morphism(text, cap),
        Command::Llpo { stage } => {
            let r = llpo_split(*stage, cap)?;
            let (inj, surj, sec, ids) = (r.injective, r.surjective, r.decode_is_section, r.identities_hold);
            Ok(Outcome::new(r)
                .check("injective", inj)
                .check("spectrum_map_surjective", surj)
                .check("decode_is_section", sec)
                .check("decoded_points_vanish_on_other_side", ids))
        }
        Command::Wlpo { term } => {
            let t = parse_term(term)?;
            let r = wlpo_counterexample(&t)?;
            let refuted = r.c_beta || r.c_beta == r.c_gamma;
            let shapes = r.beta.iter().all(|b| !b) && r.gamma.iter().filter(|b| **b).count() == 1;
            Ok(Outcome::new(r).check("candidate_refuted", refuted).check("beta_zero_gamma_nonzero", shapes))
        }
        Command::MarkovSearch { bound, .. } => run_markov(text, *bound, cap),
        Command::Separate { .. } => run_separate(text, cap),
        Command::Tower { depth, .. } => run_tower(text, *depth, cap),
        Command::Cohomology { space, level } => {
            let r = match space {
                Space::Interval => interval_cohomology(*level, cap)?,
                Space::Circle => circle_cohomology(*level, cap)?,
            };
            let connected = r.exact[0] && r.exact[1];
            let exact = r.fully_exact();
            let summary = format!("H0 = {}, H1 = {}", r.h0, r.h1);
            let mut o = Outcome::new(&r);
            o.result["summary"] = Value::String(summary);
            o = o.check("connected", connected);
            if *space == Space::Interval {
                o = o.check("augmented_exact", exact);
            }
            Ok(o)
        }
        Command::IntervalImage { cylinders } => run_interval_image(cylinders),
        Command::Stabilize { space, depth } => {
            let tower = match space {
                Space::Interval => interval_tower(*depth, cap)?,
                Space::Circle => circle_tower(*depth, cap)?,
            };
            let r = stabilization_report(&tower, *depth)?;
            let h0 = r.h0_iso.iter().all(|b| *b);
            let h1 = r.h1_iso.iter().skip(2).all(|b| *b);
            Ok(Outcome::new(r).check("h0_iso", h0).check("h1_iso_from_level_2", h1))
        }
    }
}

fn points(a: &FinBoolAlg) -> Vec<String> {
    (0..a.len()).map(|i| a.point_bitstring(i)).collect()
}

fn presentation_json(p: &Presentation) -> Value {
    json!({
        "generators": p.gens(),
        "relations": p.rels().iter().map(Term::to_string).collect::<Vec<_>>(),
    })
}

fn read_presentation(text: &str) -> Result<Presentation, Failure> {
    let doc = Document::parse(text)?;
    doc.only(&["gens", "rels"])?;
    Ok(doc.presentation("")?)
}

fn run_spectrum(text: &str, cap: Cap) -> Result<Outcome, Failure> {
    let p = read_presentation(text)?;
    let a = spectrum(&p, cap)?;
    Ok(Outcome::new(json!({
        "presentation": presentation_json(&p),
        "point_count": a.len(),
        "points": points(&a),
    })))
}

fn run_duality(text: &str, cap: Cap) -> Result<Outcome, Failure> {
    let p = read_presentation(text)?;
    let r = check_duality(&p, cap)?;
    let ok = r.bijective;
    let mut o = Outcome::new(&r);
    o.result["presentation"] = presentation_json(&p);
    Ok(o.check("bijective", ok))
}

fn run_morphism(text: &str, cap: Cap) -> Result<Outcome, Failure> {
    let doc = Document::parse(text)?;
    doc.only(&["src.gens", "src.rels", "dst.gens", "dst.rels", "map"])?;
    let src = doc.presentation("src.")?;
    let dst = doc.presentation("dst.")?;
    let images = doc.images("map")?;
    let m = hom(&src, &images, &dst, cap)?;
    let r = analyze_morphism(&m)?;
    let f = epi_mono_factor(&m, cap)?;
    let consistent = r.axiom2_consistent;
    let mut o = Outcome::new(&r);
    o.result["src_points"] = json!(points(m.src()));
    o.result["dst_points"] = json!(points(m.dst()));
    o.result["image_points"] = json!(f.middle.len());
    Ok(o.check("axiom2_consistent", consistent))
}

fn run_markov(text: &str, bound: usize, cap: Cap) -> Result<Outcome, Failure> {
    let doc = Document::parse(text)?;
    doc.only(&["gens", "rels", "seq"])?;
    let p = doc.presentation("")?;
    let seq = doc.terms("seq")?;
    let k = minimal_join_witness(&p, &seq, bound, cap)?;
    // Recheck on the spectrum: a prefix join is 1 iff it holds at every point.
    let a = spectrum(&p, cap)?;
    let prefix_is_one = |n: usize| -> Result<bool, Failure> {
        Ok(a.evaluate(&Term::join_all(seq[..n].iter().cloned()))? == a.one())
    };
    let minimal = match k {
        Some(k) => prefix_is_one(k + 1)? && !prefix_is_one(k)?,
        None => !prefix_is_one(seq.len().min(bound.saturating_add(1)))?,
    };
    Ok(Outcome::new(json!({
        "presentation": presentation_json(&p),
        "sequence_length": seq.len(),
        "bound": bound,
        "witness": k,
    }))
    .check("witness_minimal", minimal))
}

fn run_separate(text: &str, cap: Cap) -> Result<Outcome, Failure> {
    let doc = Document::parse(text)?;
    doc.only(&["gens", "rels", "f", "g"])?;
    let p = doc.presentation("")?;
    let (fs, gs) = (doc.terms("f")?, doc.terms("g")?);
    let s = separate_closed(&p, &fs, &gs, cap)?;
    let a = spectrum(&p, cap)?;
    let zero_set = |ts: &[Term]| -> Result<Vec<bool>, Failure> {
        let mut out = vec![true; a.len()];
        for t in ts {
            for (o, b) in out.iter_mut().zip(a.evaluate(t)?.bits) {
                *o &= !b;
            }
        }
        Ok(out)
    };
    let (in_f, in_g) = (zero_set(&fs)?, zero_set(&gs)?);
    let f_inside = (0..a.len()).all(|i| !in_f[i] || s.d.bits[i]);
    let g_outside = (0..a.len()).all(|i| !(in_g[i] && s.d.bits[i]));
    let bits = |v: &[bool]| v.iter().map(|b| if *b { '1' } else { '0' }).collect::<String>();
    Ok(Outcome::new(json!({
        "presentation": presentation_json(&p),
        "points": points(&a),
        "f_set": bits(&in_f),
        "g_set": bits(&in_g),
        "d": s.d.to_bitstring(),
        "used_f": s.used_f,
        "used_g": s.used_g,
        "witness": s.witness.to_string(),
    }))
    .check("f_inside_d", f_inside)
    .check("g_disjoint_from_d", g_outside))
}

fn run_tower(text: &str, depth: Option<usize>, cap: Cap) -> Result<Outcome, Failure> {
    let doc = Document::parse(text)?;
    doc.only(&["gens", "rels", "family", "depth"])?;
    let gens = match doc.get("gens") {
        Some(e) if e.value.trim() == "*" => GeneratorSupply::Countable,
        _ => GeneratorSupply::Finite(doc.names("gens")?),
    };
    let family = match doc.get("family").map(|e| (e.value.trim(), e)) {
        None | Some(("none", _)) => RelationFamily::None,
        Some(("pairwise-meet-zero", _)) => RelationFamily::PairwiseMeetZero,
        Some((other, e)) => {
            return Err(ParseError::new(e.line, e.col, format!("unknown family `{other}`")).into());
        }
    };
    let depth = match depth.or(doc.natural("depth")?) {
        Some(d) => d,
        None => return Err(Failure::Input("tower depth missing: pass --depth or a `depth:` line".into())),
    };
    let p = CountablePresentation { gens, explicit: doc.terms("rels")?, family };
    let t = truncation_tower(&p, depth, cap)?;
    let d = spectrum_tower(&t);
    let levels: Vec<Value> = (0..d.levels())
        .map(|n| {
            json!({
                "generators": t.levels[n].source().gens(),
                "points": d.labels(n),
                "transition": if n == 0 { Value::Null } else { json!(d.transition(n - 1)) },
            })
        })
        .collect();
    Ok(Outcome::new(json!({ "sizes": d.sizes(), "levels": levels })))
}

fn union_json(u: &IntervalUnion) -> Value {
    let parts: Vec<Value> = u
        .parts()
        .iter()
        .map(|i| {
            json!({
                "lo": i.lo.to_string(),
                "hi": i.hi.to_string(),
                "lo_closed": i.lo_closed,
                "hi_closed": i.hi_closed,
            })
        })
        .collect();
    json!({ "text": u.to_string(), "parts": parts })
}

fn run_interval_image(cylinders: &[String]) -> Result<Outcome, Failure> {
    let words = cylinders
        .iter()
        .map(|w| w.parse::<BitWord>().map_err(|e: IntervalError| Failure::Input(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    let image = decidable_image(&words);
    let complement = complement_closed_union(&image);
    let back = complement_open_union(&complement);
    Ok(Outcome::new(json!({
        "cylinders": cylinders,
        "image": union_json(&image),
        "complement": union_json(&complement),
    }))
    .check("normalized", image.is_normalized())
    .check("double_complement", back == image))
}
