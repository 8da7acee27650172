use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use super::{catalog, Loaded, Rendered};
use crate::arrangement::{beta_of, decone_poincare, dense_edges, intersection_lattice};
use crate::covers::{CoverEngine, Resolution};
use crate::cyclofield::IntPoly;
use crate::error::Result;
use crate::osalgebra::{weights, OsAlgebra};

fn big(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => json!(i),
        None => json!(v.to_string()),
    }
}

/// Coefficients low to high.
fn poly(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(big).collect())
}

fn pairs(m: &BTreeMap<u64, u64>) -> Value {
    json!(m.iter().map(|(k, e)| [*k, *e]).collect::<Vec<_>>())
}

fn tuple(v: &[u64]) -> String {
    let parts: Vec<String> = v.iter().map(u64::to_string).collect();
    format!("({})", parts.join(", "))
}

fn phi_product(m: &BTreeMap<u64, u64>) -> String {
    if m.is_empty() {
        return "1".into();
    }
    m.iter().map(|(k, e)| if *e == 1 { format!("Φ{k}") } else { format!("Φ{k}^{e}") }).collect::<Vec<_>>().join(" ")
}

fn power_product(f: &[(u64, u64)]) -> String {
    if f.is_empty() {
        return "1".into();
    }
    f.iter()
        .map(|(k, e)| {
            let base = if *k == 1 { "(t-1)".to_string() } else { format!("(t^{k}-1)") };
            if *e == 1 {
                base
            } else {
                format!("{base}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub(super) fn info(l: &Loaded) -> Rendered {
    let lat = intersection_lattice(&l.arr);
    let p = lat.poincare_polynomial();
    let chi = p.eval(&BigInt::from(-1));
    let beta = chi.magnitude().clone();
    let mut json = json!({
        "name": l.name,
        "hyperplanes": l.arr.len(),
        "ambient_dim": l.arr.ambient_dim(),
        "cyclotomic_order": l.arr.cyc_order(),
        "central": l.arr.is_central(),
        "poincare": poly(&p),
        "beta": big(&beta.clone().into()),
        "euler_characteristic": big(&chi),
    });
    let mut text = String::new();
    let _ = writeln!(text, "name: {}", l.name);
    let _ = writeln!(text, "hyperplanes: {}", l.arr.len());
    let _ = writeln!(text, "ambient dimension: {}", l.arr.ambient_dim());
    let _ = writeln!(text, "cyclotomic order: {}", l.arr.cyc_order());
    let _ = writeln!(text, "central: {}", l.arr.is_central());
    let _ = writeln!(text, "P(A,t) = {p}");
    let _ = writeln!(text, "beta = {beta}");
    let _ = writeln!(text, "chi = {chi}");
    if l.arr.is_central() {
        let dp = decone_poincare(&p);
        let db = beta_of(&dp);
        json["decone_poincare"] = poly(&dp);
        json["decone_beta"] = json!(db);
        let _ = writeln!(text, "P(decone,t) = {dp}");
        let _ = writeln!(text, "beta(decone) = {db}");
    }
    Rendered { json, text }
}

pub(super) fn lattice(l: &Loaded) -> Rendered {
    let lat = intersection_lattice(&l.arr);
    let closure = dense_edges(&l.arr);
    let n = l.arr.len();
    let flats: Vec<Value> = lat
        .flats()
        .iter()
        .map(|f| {
            json!({"support": f.support, "codim": f.codim, "mobius": f.mobius, "multiplicity": f.multiplicity()})
        })
        .collect();
    let edges: Vec<Value> = closure
        .flats()
        .iter()
        .filter_map(|f| {
            f.dense.map(|d| {
                json!({"support": f.support, "codim": f.codim, "multiplicity": f.multiplicity(), "dense": d})
            })
        })
        .collect();
    let json = json!({"flats": flats, "closure": {"infinity": n, "edges": edges}});
    let mut text = String::new();
    let _ = writeln!(text, "flats of L(A): {}", lat.flats().len());
    for f in lat.flats() {
        let _ = writeln!(text, "  codim {} mu {:>3} {:?}", f.codim, f.mobius, f.support);
    }
    let _ = writeln!(text, "edges of the projective closure (hyperplane {n} is at infinity):");
    for f in closure.flats() {
        if let Some(d) = f.dense {
            let _ = writeln!(text, "  codim {} {:?}{}", f.codim, f.support, if d { " dense" } else { "" });
        }
    }
    Rendered { json, text }
}

pub(super) fn os(l: &Loaded, matrices: bool, w: &[i64]) -> Result<Rendered> {
    let mut os = OsAlgebra::new(&l.arr);
    let counts: Vec<usize> = os.bases().iter().map(Vec::len).collect();
    let mut json = json!({"nbc_counts": counts});
    let mut text = format!("NBC counts: {counts:?}\n");
    if matrices {
        let cx = os.aomoto_complex(&weights(w))?;
        let basis: Vec<Vec<Vec<usize>>> =
            cx.bases.iter().map(|b| b.iter().map(|m| m.0.clone()).collect()).collect();
        let diffs: Vec<Value> = cx
            .diff
            .iter()
            .enumerate()
            .map(|(q, d)| {
                let dense = d.to_dense();
                let rows: Vec<Value> =
                    (0..dense.nrows()).map(|r| Value::Array(dense.row(r).iter().map(big).collect())).collect();
                json!({"degree": q, "rows": rows})
            })
            .collect();
        let _ = writeln!(text, "weights: {w:?}");
        for (q, b) in basis.iter().enumerate() {
            let _ = writeln!(text, "basis in degree {q}: {b:?}");
        }
        for (q, d) in cx.diff.iter().enumerate() {
            let dense = d.to_dense();
            let _ = writeln!(text, "D^{q} ({} x {}):", dense.nrows(), dense.ncols());
            for r in 0..dense.nrows() {
                let row: Vec<String> = dense.row(r).iter().map(BigInt::to_string).collect();
                let _ = writeln!(text, "  [{}]", row.join(" "));
            }
        }
        json["weights"] = json!(w);
        json["basis"] = json!(basis);
        json["differentials"] = Value::Array(diffs);
    }
    Ok(Rendered { json, text })
}

pub(super) fn local_betti(engine: &CoverEngine, k: u64, res: &Resolution) -> Result<Rendered> {
    let (local, used) = engine.local_betti_resolved(k, res)?;
    let intervals: Vec<Value> = local
        .intervals
        .iter()
        .map(|i| {
            json!({
                "q": i.q, "lower": i.lower, "upper": i.upper,
                "resolved": i.resolved, "witness_shift": i.witness_shift,
            })
        })
        .collect();
    let exact = local.is_resolved() && !used;
    let json = json!({"k": k, "method": local.method.as_str(), "intervals": intervals, "exact": exact});
    let mut text = format!("k = {k} ({})\n", local.method.as_str());
    for i in &local.intervals {
        if i.resolved {
            let _ = write!(text, "  b_{}(L^{k}_1) = {}", i.q, i.lower);
        } else {
            let _ = write!(text, "  b_{}(L^{k}_1) in [{}..{}] unresolved", i.q, i.lower, i.upper);
        }
        if let Some(w) = &i.witness_shift {
            let _ = write!(text, "  witness shift {w:?}");
        }
        text.push('\n');
    }
    if used {
        text.push_str("  (assertions used)\n");
    }
    Ok(Rendered { json, text })
}

pub(super) fn cover_betti(l: &Loaded, engine: &CoverEngine, m: u64, res: &Resolution) -> Result<Rendered> {
    let r = engine.cover_betti(m, res)?;
    let exps: Vec<Value> = r.charpoly_exponents.iter().map(pairs).collect();
    let mut json = json!({"m": m, "betti": r.betti, "charpoly_exponents": exps, "exact": r.exact});
    let mut text = format!("b(X_{m}) = {}\n", tuple(&r.betti));
    for (q, e) in r.charpoly_exponents.iter().enumerate() {
        let _ = writeln!(text, "  Δ_{q}(t) = {}", phi_product(e));
    }
    if !r.exact {
        text.push_str("  (assertions used)\n");
    }
    if let Some(note) = l.entry.as_ref().and_then(|e| e.annotation(m)) {
        json["note"] = json!(note);
        let _ = writeln!(text, "  X_{m} {note}");
    }
    Ok(Rendered { json, text })
}

pub(super) fn charpoly(engine: &CoverEngine, m: u64, q: usize, res: &Resolution) -> Result<Rendered> {
    let c = engine.monodromy_charpoly(m, q, res)?;
    let power = c.power_form.as_ref().map(|f| json!(f.iter().map(|(k, e)| [*k, *e]).collect::<Vec<_>>()));
    let json = json!({
        "m": m, "q": q,
        "exponents": pairs(&c.exponents),
        "expanded": poly(&c.expanded),
        "power_form": power,
        "degree": c.degree(),
        "exact": c.exact,
    });
    let mut text = format!("Δ_{q}(t) = {}", phi_product(&c.exponents));
    if let Some(f) = &c.power_form {
        let _ = write!(text, " = {}", power_product(f));
    }
    let _ = writeln!(text, "\n  = {}\n  degree {}", c.expanded, c.degree());
    Ok(Rendered { json, text })
}

pub(super) fn periodicity(engine: &CoverEngine, res: &Resolution) -> Result<Rendered> {
    let p = engine.periodicity(res)?;
    let classes: Vec<Value> = p
        .classes
        .iter()
        .map(|c| {
            json!({
                "divisors": c.divisors,
                "representative": c.representative,
                "residue_count": c.residue_count,
                "polynomials": c.polynomials.iter().map(poly).collect::<Vec<_>>(),
            })
        })
        .collect();
    let json = json!({"period": p.period, "classes": classes, "exact": p.exact});
    let mut text = format!("period N = {}\n", p.period);
    for c in &p.classes {
        let polys: Vec<String> = c.polynomials.iter().map(|q| q.to_string().replace('t', "m")).collect();
        let _ = writeln!(
            text,
            "  i with {{k <= n : k | i}} = {:?} ({} residues, e.g. {}): p = ({})",
            c.divisors,
            c.residue_count,
            c.representative,
            polys.join(", ")
        );
    }
    Ok(Rendered { json, text })
}

pub(super) fn zeta(engine: &CoverEngine, q: usize, res: &Resolution) -> Result<Rendered> {
    let z = engine.zeta_coefficients(q, res)?;
    let terms: Vec<[u64; 2]> = z.finite_terms.iter().map(|(k, c)| [*k, *c]).collect();
    let mut json = json!({"finite_terms": terms, "tail_beta": z.tail_beta});
    if !z.exact {
        json["exact"] = json!(false);
    }
    let sum: Vec<String> =
        z.finite_terms.iter().map(|(k, c)| if *k == 1 { c.to_string() } else { format!("{c}·{k}^(-s)") }).collect();
    let mut text = format!("ζ_{q}(s) = ζ(s)·[{}]", if sum.is_empty() { "0".into() } else { sum.join(" + ") });
    if z.tail_beta > 0 {
        let _ = write!(text, " + {}·ζ(s-1)", z.tail_beta);
    }
    text.push('\n');
    Ok(Rendered { json, text })
}

pub(super) fn catalog_list() -> Rendered {
    let entries = catalog::catalog();
    let json = Value::Array(
        entries
            .iter()
            .map(|e| {
                json!({
                    "key": e.key,
                    "notes": e.notes,
                    "hyperplanes": e.arrangement.len(),
                    "ambient_dim": e.arrangement.ambient_dim(),
                    "cyclotomic_order": e.arrangement.cyc_order(),
                    "central": e.arrangement.is_central(),
                })
            })
            .collect(),
    );
    let mut text = String::new();
    for e in &entries {
        let _ = writeln!(text, "{:<16} {}", e.key, e.notes);
    }
    Rendered { json, text }
}
