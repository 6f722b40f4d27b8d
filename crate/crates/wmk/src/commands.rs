use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::{json, Value};

use wreath_core::algebra::RatFunc;
use wreath_core::macdonald::{conjectured_norm, family_cached, norm_oracle, wreath_pieri_oracle, DualKind, Variant};
use wreath_core::partition::{core_quotient, from_core_quotient, multipartitions, MayaDiagram, Partition};
use wreath_core::symfun::Basis;
use wreath_core::toroidal::{
    check_membership, fock_single_current, golden, kernel_e, kernel_h, kernel_monomial, norm_toroidal, sym_matrix_element,
    wreath_pieri_toroidal, CurrentValue, Mode, NormRoute, NormScalars, PieriMultiplier, Rep, ShuffleInput, ToroidalError,
    UpsilonMode,
};

use crate::render;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("computation failed: {0}")]
    Computation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Computation(_) => 3,
        }
    }
}

fn computation<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Computation(e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Latex => "latex",
        }
    }
}

pub struct Report {
    pub json: Value,
    pub text: String,
    pub latex: String,
    /// false when a cross-check inside the command failed
    pub consistent: bool,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("JSON values serialize") + "\n",
            Format::Latex => self.latex.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RouteChoice {
    Oracle,
    Toroidal,
    Both,
}

impl RouteChoice {
    fn name(self) -> &'static str {
        match self {
            RouteChoice::Oracle => "oracle",
            RouteChoice::Toroidal => "toroidal",
            RouteChoice::Both => "both",
        }
    }

    fn oracle(self) -> bool {
        self != RouteChoice::Toroidal
    }

    fn toroidal(self) -> bool {
        self != RouteChoice::Oracle
    }
}

/// A validated command with parsed inputs.
#[derive(Clone, Debug)]
pub enum Job {
    Cq { ell: usize, lambda: Partition },
    Macdonald { ell: usize, core: Partition, n: usize, variant: Variant, basis: Basis },
    Norm { ell: usize, lambda: Partition, route: RouteChoice },
    Pieri { ell: usize, mu: Partition, color: usize, n: usize, kind: DualKind, route: RouteChoice },
    Verify { ell: usize, cores: Vec<Partition>, min_quot: usize, max_quot: usize, route: RouteChoice },
    PaperExample,
    Selftest,
}

pub fn parse_partition(s: &str) -> Result<Partition, CliError> {
    Partition::parse(s).map_err(|e| CliError::Validation(format!("{s:?}: {e}")))
}

pub fn check_ell(ell: usize) -> Result<(), CliError> {
    if ell == 0 {
        return Err(CliError::Validation("ℓ must be at least 1".into()));
    }
    Ok(())
}

fn check_toroidal(ell: usize) -> Result<(), CliError> {
    if ell < 3 {
        return Err(CliError::Validation(ToroidalError::UnsupportedRank(ell).to_string()));
    }
    Ok(())
}

fn check_core(core: &Partition, ell: usize) -> Result<(), CliError> {
    if !core.is_core(ell) {
        return Err(CliError::Validation(format!("{core} is not a {ell}-core")));
    }
    Ok(())
}

fn kind_name(k: DualKind) -> &'static str {
    match k {
        DualKind::E => "e",
        DualKind::DualH => "dual-h",
    }
}

fn parts(p: &Partition) -> Value {
    p.to_json()
}

fn quotient_text(q: &[Partition]) -> String {
    format!("({})", q.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
}

impl Job {
    /// Checks the inputs that the computation itself would reject late.
    pub fn validate(&self) -> Result<(), CliError> {
        match self {
            Job::Cq { ell, .. } => check_ell(*ell),
            Job::Macdonald { ell, core, .. } => {
                check_ell(*ell)?;
                check_core(core, *ell)
            }
            Job::Norm { ell, route, .. } => {
                check_ell(*ell)?;
                if route.toroidal() {
                    check_toroidal(*ell)?;
                }
                Ok(())
            }
            Job::Pieri { ell, color, route, .. } => {
                check_ell(*ell)?;
                if color >= ell {
                    return Err(CliError::Validation(format!("color {color} is not below ℓ = {ell}")));
                }
                if route.toroidal() {
                    check_toroidal(*ell)?;
                }
                Ok(())
            }
            Job::Verify { ell, cores, route, .. } => {
                check_ell(*ell)?;
                if route.toroidal() {
                    check_toroidal(*ell)?;
                }
                cores.iter().try_for_each(|c| check_core(c, *ell))
            }
            Job::PaperExample | Job::Selftest => Ok(()),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Job::Cq { .. } => "cq",
            Job::Macdonald { .. } => "macdonald",
            Job::Norm { .. } => "norm",
            Job::Pieri { .. } => "pieri",
            Job::Verify { .. } => "verify",
            Job::PaperExample => "paper-example",
            Job::Selftest => "selftest",
        }
    }

    /// Canonical description of the inputs, used as the cache key.
    pub fn canonical(&self) -> Value {
        let inputs = match self {
            Job::Cq { ell, lambda } => json!({"l": ell, "lambda": parts(lambda)}),
            Job::Macdonald { ell, core, n, variant, basis } => {
                json!({"l": ell, "core": parts(core), "n": n, "variant": variant.name(), "basis": basis.name()})
            }
            Job::Norm { ell, lambda, route } => json!({"l": ell, "lambda": parts(lambda), "route": route.name()}),
            Job::Pieri { ell, mu, color, n, kind, route } => json!({
                "l": ell, "mu": parts(mu), "color": color, "n": n, "kind": kind_name(*kind), "route": route.name()
            }),
            Job::Verify { ell, cores, min_quot, max_quot, route } => json!({
                "l": ell, "cores": cores.iter().map(parts).collect::<Vec<_>>(),
                "min_quot": min_quot, "max_quot": max_quot, "route": route.name()
            }),
            Job::PaperExample | Job::Selftest => json!({}),
        };
        json!({"command": self.name(), "inputs": inputs})
    }

    pub fn run(&self, ups: UpsilonMode) -> Result<Report, CliError> {
        self.validate()?;
        match self {
            Job::Cq { ell, lambda } => Ok(cq(*ell, lambda)),
            Job::Macdonald { ell, core, n, variant, basis } => macdonald(*ell, core, *n, *variant, *basis),
            Job::Norm { ell, lambda, route } => norm(*ell, lambda, *route, ups),
            Job::Pieri { ell, mu, color, n, kind, route } => pieri(*ell, mu, *color, *n, *kind, *route, ups),
            Job::Verify { ell, cores, min_quot, max_quot, route } => verify(*ell, cores, *min_quot, *max_quot, *route, ups),
            Job::PaperExample => paper_example(ups),
            Job::Selftest => selftest(ups),
        }
    }
}

fn cq(ell: usize, lambda: &Partition) -> Report {
    let cq = core_quotient(lambda, ell);
    let maya = MayaDiagram::from_partition(lambda);
    let lo = -(lambda.len() as i64) - 2;
    let hi = lambda.parts().first().copied().unwrap_or(0) as i64 + 2;
    let (rlo, rhi) = (lo.div_euclid(ell as i64) - 1, hi.div_euclid(ell as i64) + 2);
    let total = maya.render(lo, hi);
    let residues: Vec<String> = (0..ell).map(|i| maya.residue(i, ell).render(rlo, rhi)).collect();

    let mut text = format!("λ         {lambda}\nℓ         {ell}\ncore      {}\nquotient  {}\ncharges   {:?}\n", cq.core, quotient_text(&cq.quotient), cq.charges);
    text.push_str(&format!("maya      {total}\n"));
    for (i, r) in residues.iter().enumerate() {
        text.push_str(&format!("maya[{i}]   {r}\n"));
    }
    let mut json = cq.to_json();
    json["lambda"] = parts(lambda);
    json["maya"] = json!({"window": [lo, hi], "total": total, "residues": residues});
    let latex = format!(
        "\\[\\lambda = {},\\quad \\mathrm{{core}} = {},\\quad \\mathrm{{quot}} = {}\\]\n",
        render::partition(lambda),
        render::partition(&cq.core),
        render::quotient(&cq.quotient)
    );
    Report { json, text, latex, consistent: true }
}

fn macdonald(ell: usize, core: &Partition, n: usize, variant: Variant, basis: Basis) -> Result<Report, CliError> {
    let fam = family_cached(core, n, ell).map_err(computation)?;
    let json = fam.to_json(variant, basis);
    let mut text = format!("ℓ = {ell}, core {core}, n = {n}, {} in the {} basis\n", variant.name(), basis.name());
    let mut rows = Vec::new();
    for (lambda, quot) in fam.members.iter().zip(&fam.quotients) {
        let f = match variant {
            Variant::H => fam.h.get(lambda).cloned(),
            v => fam.variants.get(lambda).map(|x| x.get(v).clone()),
        }
        .ok_or_else(|| CliError::Computation(format!("{lambda} missing from the family")))?;
        text.push_str(&format!("{lambda} {}: {}\n", quotient_text(quot), f.display_in(basis)));
        rows.push(vec![render::partition(lambda), render::quotient(quot), render::symfunc(&f, basis)]);
    }
    let latex = render::table(&["$\\lambda$", "quotient", variant.name()], &rows);
    Ok(Report { json, text, latex, consistent: true })
}

fn norm(ell: usize, lambda: &Partition, route: RouteChoice, ups: UpsilonMode) -> Result<Report, CliError> {
    let mut values: Vec<(&str, RatFunc)> = Vec::new();
    let mut scalars = Vec::new();
    if route.oracle() {
        values.push(("oracle", norm_oracle(lambda, ell).map_err(computation)?));
    }
    if route.toroidal() {
        values.push(("N-/M-", norm_toroidal(lambda, ell, NormRoute::Minus, ups).map_err(computation)?));
        values.push(("N+/M+", norm_toroidal(lambda, ell, NormRoute::Plus, ups).map_err(computation)?));
        scalars = NormScalars::compute(lambda, ell, ups).map_err(computation)?.records();
    }
    let hook = conjectured_norm(lambda, ell);
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    let hook_match = values.iter().all(|(_, v)| *v == hook);

    let mut text = format!("λ = {lambda}, ℓ = {ell}\n");
    for (name, v) in &values {
        text.push_str(&format!("{name:<13} {v}\n"));
    }
    text.push_str(&format!("{:<13} {hook}\n", "hook product"));
    text.push_str(&format!("routes agree: {}\nequals hook product: {}\n", yes(agree), yes(hook_match)));
    let json = json!({
        "lambda": parts(lambda),
        "ell": ell,
        "values": values.iter().map(|(n, v)| json!({"route": n, "value": v.to_json(), "text": v.to_string()})).collect::<Vec<_>>(),
        "scalars": scalars,
        "hook_product": {"value": hook.to_json(), "text": hook.to_string()},
        "routes_agree": agree,
        "equals_hook_product": hook_match,
    });
    let mut latex = String::from("\\begin{align*}\n");
    for (name, v) in &values {
        latex.push_str(&format!("\\text{{{name}}}:&\\ {} \\\\\n", render::ratfunc(v)));
    }
    latex.push_str(&format!("\\text{{hook product}}:&\\ {}\n\\end{{align*}}\n", render::ratfunc(&hook)));
    Ok(Report { json, text, latex, consistent: agree })
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn pieri(ell: usize, mu: &Partition, color: usize, n: usize, kind: DualKind, route: RouteChoice, ups: UpsilonMode) -> Result<Report, CliError> {
    let mut tables: Vec<(&str, BTreeMap<Partition, RatFunc>)> = Vec::new();
    if route.oracle() {
        tables.push(("oracle", wreath_pieri_oracle(mu, color, n, ell, kind).map_err(computation)?));
    }
    if route.toroidal() {
        let k = match kind {
            DualKind::E => PieriMultiplier::E,
            DualKind::DualH => PieriMultiplier::DualH,
        };
        tables.push(("toroidal", wreath_pieri_toroidal(mu, color, n, ell, k, ups).map_err(computation)?));
    }
    let agree = tables.windows(2).all(|w| w[0].1 == w[1].1);
    let mut text = format!("μ = {mu}, ℓ = {ell}, color {color}, n = {n}, {}\n", kind_name(kind));
    let mut routes = serde_json::Map::new();
    let mut rows = Vec::new();
    for (name, t) in &tables {
        text.push_str(&format!("[{name}]\n"));
        for (lambda, c) in t {
            text.push_str(&format!("  {lambda}: {c}\n"));
            if *name == tables[0].0 {
                rows.push(vec![render::partition(lambda), render::ratfunc(c)]);
            }
        }
        routes.insert(
            name.to_string(),
            Value::Array(t.iter().map(|(l, c)| json!({"lambda": parts(l), "coeff": c.to_json(), "text": c.to_string()})).collect()),
        );
    }
    if tables.len() > 1 {
        text.push_str(&format!("routes agree: {}\n", yes(agree)));
    }
    let json = json!({"mu": parts(mu), "ell": ell, "color": color, "n": n, "kind": kind_name(kind), "routes": routes, "routes_agree": agree});
    let latex = render::table(&["$\\lambda$", "coefficient"], &rows);
    Ok(Report { json, text, latex, consistent: agree })
}

fn verify(ell: usize, cores: &[Partition], min_quot: usize, max_quot: usize, route: RouteChoice, ups: UpsilonMode) -> Result<Report, CliError> {
    let mut work: Vec<(Partition, Partition, Vec<Partition>)> = Vec::new();
    for core in cores {
        for m in min_quot..=max_quot {
            if route.oracle() {
                family_cached(core, m, ell).map_err(computation)?;
            }
            for quot in multipartitions(m, ell) {
                let lambda = from_core_quotient(core, &quot).map_err(computation)?;
                work.push((lambda, core.clone(), quot));
            }
        }
    }
    let computed: Vec<Result<RatFunc, CliError>> = work
        .par_iter()
        .map(|(lambda, _, _)| match route {
            RouteChoice::Toroidal => norm_toroidal(lambda, ell, NormRoute::Minus, ups).map_err(computation),
            _ => norm_oracle(lambda, ell).map_err(computation),
        })
        .collect();
    let mut rows = Vec::new();
    let mut text = String::new();
    let mut latex_rows = Vec::new();
    let mut failures = 0;
    for ((lambda, core, quot), value) in work.iter().zip(computed) {
        let value = value?;
        let hook = conjectured_norm(lambda, ell);
        let ok = value == hook;
        failures += usize::from(!ok);
        let verdict = if ok { "PASS" } else { "FAIL" };
        text.push_str(&format!("{lambda} core {core} quot {} {verdict}\n  norm {value}\n  hook {hook}\n", quotient_text(quot)));
        latex_rows.push(vec![render::partition(lambda), render::ratfunc(&value), verdict.to_string()]);
        rows.push(json!({
            "lambda": parts(lambda), "core": parts(core), "quotient": quot.iter().map(parts).collect::<Vec<_>>(),
            "norm": value.to_json(), "hook_product": hook.to_json(), "verdict": verdict,
        }));
    }
    text.push_str(&format!("{} checked, {failures} failed\n", rows.len()));
    let json = json!({"ell": ell, "route": route.name(), "rows": rows, "failures": failures});
    let latex = render::table(&["$\\lambda$", "norm", "verdict"], &latex_rows);
    Ok(Report { json, text, latex, consistent: failures == 0 })
}

fn paper_example(ups: UpsilonMode) -> Result<Report, CliError> {
    let items = golden::worked_example(ups).map_err(computation)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut latex_rows = Vec::new();
    let matched = items.iter().filter(|i| i.matches()).count();
    for it in &items {
        let verdict = if it.matches() { "PASS" } else { "FAIL" };
        text.push_str(&format!("{:<20} {verdict}\n", it.name));
        let mut row = json!({"name": it.name, "verdict": verdict, "computed": it.computed.to_json(), "text": it.computed.to_string()});
        if !it.matches() {
            let d = it.discrepancy();
            text.push_str(&format!("  computed           {}\n  expected           {}\n", it.computed, it.expected));
            if let Some(d) = &d {
                text.push_str(&format!("  computed/expected  {d}\n"));
            }
            row["expected"] = it.expected.to_json();
            row["discrepancy"] = d.map(|d| Value::String(d.to_string())).unwrap_or(Value::Null);
        }
        latex_rows.push(vec![format!("\\text{{{}}}", it.name), render::ratfunc(&it.computed), verdict.to_string()]);
        rows.push(row);
    }
    text.push_str(&format!("{matched}/{} match\n", items.len()));
    let json = json!({"items": rows, "matched": matched, "total": items.len()});
    let latex = render::table(&["quantity", "value", "verdict"], &latex_rows);
    Ok(Report { json, text, latex, consistent: matched == items.len() })
}

fn selftest(ups: UpsilonMode) -> Result<Report, CliError> {
    let p = |s: &str| Partition::parse(s).expect("literal");
    let mut checks: Vec<(&str, bool)> = Vec::new();

    let fig = core_quotient(&p("5,4,1"), 3);
    checks.push(("core and quotient of (5,4,1) at ℓ=3", fig.quotient == vec![p("1"), p("1"), p("")] && fig.core == p("2,1,1")));
    checks.push(("core of (4,3,1) at ℓ=3", core_quotient(&p("4,3,1"), 3).core == p("2")));

    let rank_one = (1..=3).flat_map(wreath_core::partition::partitions).all(|l| {
        norm_oracle(&l, 1).map(|v| v == conjectured_norm(&l, 1)).unwrap_or(false)
    });
    checks.push(("ℓ=1 norms equal hook products, |λ| ≤ 3", rank_one));

    let l = p("2,2,1");
    let routes = (|| -> Result<bool, CliError> {
        let o = norm_oracle(&l, 3).map_err(computation)?;
        let m = norm_toroidal(&l, 3, NormRoute::Minus, ups).map_err(computation)?;
        let pl = norm_toroidal(&l, 3, NormRoute::Plus, ups).map_err(computation)?;
        Ok(o == m && m == pl && o == conjectured_norm(&l, 3))
    })()?;
    checks.push(("(2,2,1) norm by basis, N-/M- and N+/M+", routes));

    let mut currents = true;
    for lambda in [p(""), p("1"), p("2,1")] {
        for i in 0..3 {
            for k in -1..=1 {
                let kern = kernel_monomial(i, k, 3).map_err(computation)?;
                let CurrentValue::Transitions(direct) =
                    fock_single_current(&lambda, i, k, Mode::F, Rep::Minus, 3, ups).map_err(computation)?
                else {
                    currents = false;
                    continue;
                };
                for node in lambda.addable().into_iter().filter(|n| n.color(3) == i) {
                    let mu = lambda.add_node(node).expect("addable");
                    let me = sym_matrix_element(ShuffleInput::Kernel(&kern), &lambda, &mu, Rep::Minus, 3, ups).map_err(computation)?;
                    currents &= direct.get(&mu).cloned().unwrap_or_else(RatFunc::zero) == me.value;
                }
            }
        }
    }
    checks.push(("single currents agree with symmetrization", currents));

    let mut members = true;
    for pp in 0..3 {
        for k in [kernel_e(pp, 1, 3), kernel_h(pp, 1, 3)] {
            members &= check_membership(&k.map_err(computation)?).map_err(computation)?.ok();
        }
    }
    checks.push(("E and H kernels of degree 1 are shuffle elements", members));

    let mut text = String::new();
    for (name, ok) in &checks {
        text.push_str(&format!("{} {name}\n", if *ok { "PASS" } else { "FAIL" }));
    }
    let passed = checks.iter().filter(|c| c.1).count();
    text.push_str(&format!("{passed}/{} passed\n", checks.len()));
    let json = json!({"checks": checks.iter().map(|(n, ok)| json!({"name": n, "ok": ok})).collect::<Vec<_>>(), "passed": passed});
    let latex = render::table(&["check", "result"], &checks.iter().map(|(n, ok)| vec![format!("\\text{{{n}}}"), yes(*ok).to_string()]).collect::<Vec<_>>());
    Ok(Report { json, text, latex, consistent: passed == checks.len() })
}
