//! One function per verb. Each writes its report to `out` and returns the
//! exit code for a completed run: `0` for success or a true predicate, `1`
//! for a false one.

use crate::cli::{ConstructArgs, EnumerateArgs, Format, RationalArgs, YbeCommand};
use crate::error::CliError;
use crate::io::{brace_file, load_brace, load_group, load_solution, solution_file, write_json};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};
use skewbrace::constructions::{Family, FamilyParams};
use skewbrace::enumeration::{classes_on_additive, enumerate_on_additive, identify, IsoCertificate};
use skewbrace::group::{catalog_group, catalog_name, catalog_size, cyclic, elementary_abelian};
use skewbrace::rational::{RationalBrace, Variant};
use skewbrace::{Bounds, FiniteGroup, SetSolution, SkewBrace};
use std::fs;
use std::io::Write;
use std::path::Path;

type Outcome = Result<u8, CliError>;

fn emit(out: &mut dyn Write, text: impl AsRef<str>) -> Result<(), CliError> {
    writeln!(out, "{}", text.as_ref()).map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })
}

fn group_name(group: &FiniteGroup) -> String {
    identify(group)
        .and_then(|i| catalog_name(group.order(), i))
        .map(String::from)
        .unwrap_or_else(|| {
            let kind = if group.is_cyclic() {
                "cyclic"
            } else if group.is_abelian() {
                "abelian"
            } else {
                "nonabelian"
            };
            format!("{kind} group of order {}", group.order())
        })
}

pub fn verify(file: &Path, out: &mut dyn Write) -> Outcome {
    let b = load_brace(file)?.brace;
    let p = b.predicates();
    emit(out, format!("valid skew brace of order {}", b.order()))?;
    emit(out, format!("additive group        {}", group_name(b.additive())))?;
    emit(out, format!("multiplicative group  {}", group_name(b.multiplicative())))?;
    emit(out, format!("trivial               {}", p.is_trivial))?;
    emit(out, format!("almost trivial        {}", p.is_almost_trivial))?;
    emit(out, format!("abelian type          {}", p.is_abelian_type))?;
    emit(out, format!("bi-skew               {}", p.is_bi_skew))?;
    Ok(0)
}

/// Key/value lines with aligned columns, values rendered as compact JSON so
/// that the text and JSON forms carry the same values.
fn aligned(value: &Value) -> String {
    let Value::Object(map) = value else {
        return value.to_string();
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    map.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}

fn render(value: &impl Serialize, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    let value = serde_json::to_value(value).expect("reports serialize");
    match format {
        Format::Json => emit(out, serde_json::to_string_pretty(&value).expect("values serialize")),
        Format::Text => emit(out, aligned(&value)),
        Format::Csv => Err(CliError::Usage(String::from(
            "csv output is only available for enumerate",
        ))),
    }
}

pub fn analyze(file: &Path, format: Format, bounds: &Bounds, out: &mut dyn Write) -> Outcome {
    let b = load_brace(file)?.brace;
    let report = b.analyze(bounds)?;
    render(&report, format, out)?;
    Ok(0)
}

pub fn dedekind(file: &Path, bounds: &Bounds, out: &mut dyn Write) -> Outcome {
    let b = load_brace(file)?.brace;
    let check = b.dedekind_check(bounds)?;
    match check.witness {
        None => {
            let count = b.sub_skew_braces(bounds)?.len();
            emit(out, format!("Dedekind: all {count} sub-skew braces are ideals"))?;
            Ok(0)
        }
        Some(w) => {
            let c = b.conditions(&w.elements);
            let failing: Vec<&str> = [
                (c.additively_normal, "not normal in (B,+)"),
                (c.lambda_invariant, "not λ-invariant"),
                (c.multiplicatively_normal, "not normal in (B,∘)"),
            ]
            .into_iter()
            .filter(|(ok, _)| !ok)
            .map(|(_, why)| why)
            .collect();
            emit(
                out,
                format!(
                    "not Dedekind: sub-skew brace {} is not an ideal ({})",
                    w.elements,
                    failing.join(", ")
                ),
            )?;
            Ok(1)
        }
    }
}

fn check_output_file(path: &Path) -> Result<(), CliError> {
    let parent = path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .unwrap_or(Path::new("."));
    if !parent.is_dir() {
        return Err(CliError::Usage(format!(
            "output directory {} does not exist",
            parent.display()
        )));
    }
    if path.is_dir() {
        return Err(CliError::Usage(format!("{} is a directory", path.display())));
    }
    Ok(())
}

pub fn construct(args: &ConstructArgs, bounds: &Bounds, out: &mut dyn Write) -> Outcome {
    check_output_file(&args.out)?;
    let family = Family::from_tag(&args.family).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown family {:?}; expected two_power, odd_p_cyclic, odd_p_nonabelian, trivial or almost_trivial",
            args.family
        ))
    })?;
    let needs_group = matches!(family, Family::Trivial | Family::AlmostTrivial);
    let group = args.group.as_deref().map(load_group).transpose()?;
    let p = match (args.p, family) {
        (Some(p), _) => p,
        (None, Family::TwoPower) => 2,
        (None, _) if needs_group => 0,
        (None, _) => return Err(CliError::Usage(format!("family {} needs --p", family.tag()))),
    };
    let n = match args.n {
        Some(n) => n,
        None if needs_group => 0,
        None => return Err(CliError::Usage(format!("family {} needs --n", family.tag()))),
    };
    let built = FamilyParams { family, p, n, group }.build(bounds)?;
    write_json(&args.out, &brace_file(&built.brace, built.labels))?;
    emit(
        out,
        format!(
            "wrote {} brace of order {} to {}",
            family.tag(),
            built.brace.order(),
            args.out.display()
        ),
    )?;
    Ok(0)
}

#[derive(Serialize)]
struct CountRow {
    additive: String,
    additive_index: usize,
    multiplicative: String,
    multiplicative_index: Option<usize>,
    classes: usize,
    labeled: usize,
}

fn additive_groups(order: usize, selector: Option<&str>) -> Result<Vec<(usize, FiniteGroup)>, CliError> {
    let size = catalog_size(order).ok_or(skewbrace::Error::OutOfCatalog { order, index: 0 })?;
    let pick = |g: FiniteGroup| -> Result<Vec<(usize, FiniteGroup)>, CliError> {
        let i = identify(&g).expect("catalog groups identify");
        Ok(vec![(i, catalog_group(order, i)?)])
    };
    match selector {
        None => (0..size).map(|i| Ok((i, catalog_group(order, i)?))).collect(),
        Some("cyclic") => pick(cyclic(order)),
        Some("elab") => {
            let p = (2..=order).find(|d| order.is_multiple_of(*d)).unwrap_or(1);
            let mut k = 0;
            let mut m = order;
            while m > 1 && m.is_multiple_of(p) {
                m /= p;
                k += 1;
            }
            if m != 1 || order == 1 {
                return Err(CliError::Usage(format!("{order} is not a prime power")));
            }
            pick(elementary_abelian(p, k))
        }
        Some(index) => {
            let i: usize = index
                .parse()
                .map_err(|_| CliError::Usage(format!("--additive expects cyclic, elab or an index, got {index:?}")))?;
            Ok(vec![(i, catalog_group(order, i)?)])
        }
    }
}

pub fn enumerate(args: &EnumerateArgs, bounds: &Bounds, out: &mut dyn Write) -> Outcome {
    if args.out.is_file() {
        return Err(CliError::Usage(format!(
            "{} is a file, expected a directory",
            args.out.display()
        )));
    }
    if args.order > bounds.max_enumeration_order {
        return Err(skewbrace::Error::BoundExceeded {
            order: args.order,
            bound: bounds.max_enumeration_order,
        }
        .into());
    }
    let groups = additive_groups(args.order, args.additive.as_deref())?;
    fs::create_dir_all(&args.out).map_err(|source| CliError::Io {
        path: args.out.clone(),
        source,
    })?;
    let name = |i: Option<usize>| {
        i.and_then(|i| catalog_name(args.order, i))
            .map(String::from)
            .unwrap_or_else(|| String::from("?"))
    };
    let mut rows: Vec<CountRow> = Vec::new();
    let mut files = 0;
    for (ai, g) in &groups {
        let classes = classes_on_additive(g, bounds)?;
        let braces: Vec<SkewBrace> = if args.up_to_iso {
            classes.iter().map(|c| c.brace.clone()).collect()
        } else {
            enumerate_on_additive(g, bounds)?
        };
        for (k, b) in braces.iter().enumerate() {
            let path = args.out.join(format!("brace-{}-{}-{:04}.json", args.order, ai, k));
            write_json(&path, &brace_file(b, None))?;
            files += 1;
        }
        for c in &classes {
            match rows
                .iter_mut()
                .find(|r| r.additive_index == *ai && r.multiplicative_index == c.multiplicative_index)
            {
                Some(r) => {
                    r.classes += 1;
                    r.labeled += c.labeled_count;
                }
                None => rows.push(CountRow {
                    additive: name(Some(*ai)),
                    additive_index: *ai,
                    multiplicative: name(c.multiplicative_index),
                    multiplicative_index: c.multiplicative_index,
                    classes: 1,
                    labeled: c.labeled_count,
                }),
            }
        }
    }
    rows.sort_by_key(|r| (r.additive_index, r.multiplicative_index));
    let summary = match args.format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "order": args.order,
            "up_to_iso": args.up_to_iso,
            "files": files,
            "counts": rows,
        }))
        .expect("counts serialize"),
        Format::Csv => {
            let mut s = String::from("additive,additive_index,multiplicative,multiplicative_index,classes,labeled\n");
            for r in &rows {
                let mi = r.multiplicative_index.map(|i| i.to_string()).unwrap_or_default();
                s.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.additive, r.additive_index, r.multiplicative, mi, r.classes, r.labeled
                ));
            }
            s.trim_end().to_string()
        }
        Format::Text => {
            let mut s = format!(
                "{:<10} {:<14} {:>7} {:>7}\n",
                "additive", "multiplicative", "classes", "labeled"
            );
            for r in &rows {
                s.push_str(&format!(
                    "{:<10} {:<14} {:>7} {:>7}\n",
                    r.additive, r.multiplicative, r.classes, r.labeled
                ));
            }
            let total: usize = rows.iter().map(|r| r.classes).sum();
            s.push_str(&format!("{total} classes, {files} files written"));
            s
        }
    };
    let extension = match args.format {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Text => "txt",
    };
    let summary_path = args.out.join(format!("counts.{extension}"));
    fs::write(&summary_path, format!("{summary}\n")).map_err(|source| CliError::Io {
        path: summary_path,
        source,
    })?;
    emit(out, summary)?;
    Ok(0)
}

pub fn iso(first: &Path, second: &Path, out: &mut dyn Write) -> Outcome {
    let a = load_brace(first)?.brace;
    let b = load_brace(second)?.brace;
    match skewbrace::enumeration::are_isomorphic(&a, &b) {
        IsoCertificate::Isomorphic(map) => {
            emit(out, format!("isomorphic: {map:?}"))?;
            Ok(0)
        }
        IsoCertificate::Refuted(reason) => {
            emit(out, format!("not isomorphic: {reason}"))?;
            Ok(1)
        }
    }
}

fn write_solution(solution: &SetSolution, path: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => {
            check_output_file(p)?;
            write_json(p, &solution_file(solution))
        }
        None => emit(
            out,
            serde_json::to_string_pretty(&solution_file(solution)).expect("solutions serialize"),
        ),
    }
}

pub fn ybe(command: &YbeCommand, out: &mut dyn Write) -> Outcome {
    match command {
        YbeCommand::FromBrace { file, out: path } => {
            let b = load_brace(file)?.brace;
            write_solution(&SetSolution::from_brace(&b), path.as_deref(), out)?;
            Ok(0)
        }
        YbeCommand::Check { file } => {
            let s = load_solution(file)?;
            emit(out, format!("valid solution of size {}", s.size()))?;
            emit(out, format!("involutive       {}", s.is_involutive()))?;
            emit(out, format!("diagonal fixing  {}", s.is_diagonal_fixing()))?;
            Ok(0)
        }
        YbeCommand::Retract { file, steps, out: path } => {
            let mut s = load_solution(file)?;
            let mut sizes = vec![s.size()];
            for _ in 0..*steps {
                s = s.retract()?.0;
                sizes.push(s.size());
            }
            let sizes: Vec<String> = sizes.iter().map(usize::to_string).collect();
            match path {
                Some(p) => {
                    write_solution(&s, Some(p), out)?;
                    emit(out, format!("retraction sizes {}", sizes.join(" -> ")))?;
                }
                None => write_solution(&s, None, out)?,
            }
            Ok(0)
        }
        YbeCommand::Level { file, max_steps } => {
            let s = load_solution(file)?;
            let steps = max_steps.unwrap_or(s.size());
            let sizes = s.retraction_sizes(steps)?;
            let shown: Vec<String> = sizes.iter().map(usize::to_string).collect();
            match s.multipermutation_level(Some(steps))? {
                Some(level) => {
                    emit(
                        out,
                        format!("multipermutation level {level} (sizes {})", shown.join(" -> ")),
                    )?;
                    Ok(0)
                }
                None => {
                    emit(
                        out,
                        format!(
                            "no finite level within {steps} retractions (sizes {})",
                            shown.join(" -> ")
                        ),
                    )?;
                    Ok(1)
                }
            }
        }
    }
}

pub fn rational(args: &RationalArgs, out: &mut dyn Write) -> Outcome {
    let variant = Variant::from_tag(&args.variant).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown variant {:?}; expected a2a, a2b, c1 or c2",
            args.variant
        ))
    })?;
    let x = || -> Result<BigRational, CliError> {
        let text = args
            .x
            .as_deref()
            .ok_or_else(|| CliError::Usage(format!("{} needs --x", variant.tag())))?;
        text.parse::<BigRational>()
            .map_err(|e| CliError::Usage(format!("--x {text:?} is not a rational: {e}")))
    };
    let brace = match variant {
        Variant::A2a => RationalBrace::a2a(&args.forbidden)?,
        Variant::A2b => {
            let (Some(m1), Some(m2)) = (args.m1, args.m2) else {
                return Err(CliError::Usage(String::from("a2b needs --m1 and --m2")));
            };
            RationalBrace::a2b(&args.forbidden, m1, m2)?
        }
        Variant::C1 => RationalBrace::c1(&args.forbidden, x()?)?,
        Variant::C2 => RationalBrace::c2(&args.forbidden, x()?)?,
    };
    let axioms = brace.axiom_sample_check(args.seed, args.sample);
    let kernel = brace.kernel_sample_check(args.seed, args.sample);
    let witness = args
        .witness_prime
        .map(|p| brace.dedekind_witness(p, args.seed, args.sample))
        .transpose()?;
    let passed = axioms.passed() && kernel.passed() && witness.as_ref().is_none_or(|w| w.certifies());
    let mut report = json!({
        "variant": variant.tag(),
        "forbidden": brace.domain().forbidden(),
        "seed": args.seed,
        "axioms": axioms.to_string(),
        "kernel": kernel.to_string(),
        "passed": passed,
    });
    if let Some(w) = &witness {
        report["witness"] = json!({
            "prime": w.prime,
            "u": w.u.to_string(),
            "v": w.v.to_string(),
            "lambda_u_v": w.element.to_string(),
            "in_domain": w.in_domain,
            "in_y": w.in_y,
            "closure_samples": w.closure_samples,
            "closure_failure": w.closure_failure,
            "certifies": w.certifies(),
        });
    }
    match args.format {
        Format::Json => emit(out, serde_json::to_string_pretty(&report).expect("values serialize"))?,
        Format::Text => {
            emit(out, aligned(&report))?;
        }
        Format::Csv => {
            return Err(CliError::Usage(String::from(
                "csv output is only available for enumerate",
            )))
        }
    }
    Ok(if passed { 0 } else { 1 })
}
