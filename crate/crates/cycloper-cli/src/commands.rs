use cycloper::arith::{Field, Point, RatFunc};
use cycloper::lie::WeylElement;
use cycloper::{
    build_miura, canonical_representative, canonical_residue, classify_general_form, cover_symmetry, fixed_flag_cells,
    lift_to_cover, reproduce_generic, reproduce_orbit_a1, riccati_solve, Branch, CoreError, Equivariant, GaudinModel,
    MiuraOper, RiccatiMode,
};
use num_traits::Zero;

use crate::error::{CliError, Context};
use crate::problem::{BranchSpec, Loaded, Problem, Scalar};
use crate::report::{Entry, Report, Section, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Canonical,
    Residues,
    Classify,
    Reproduce,
    FlagCells,
    BetheCheck,
    Energies,
    SpectrumCrosscheck,
    LiftCover,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Canonical => "canonical",
            Command::Residues => "residues",
            Command::Classify => "classify",
            Command::Reproduce => "reproduce",
            Command::FlagCells => "flag-cells",
            Command::BetheCheck => "bethe-check",
            Command::Energies => "energies",
            Command::SpectrumCrosscheck => "spectrum-crosscheck",
            Command::LiftCover => "lift-cover",
        }
    }
}

pub fn run(problem: &Loaded, cmd: Command) -> Result<Report, CliError> {
    match problem {
        Loaded::Numeric(p) => run_command(p, cmd),
        Loaded::Symbolic(p) => run_command(p, cmd),
    }
}

pub fn run_command<K: Scalar>(p: &Problem<K>, cmd: Command) -> Result<Report, CliError> {
    let sections = match cmd {
        Command::Canonical => canonical(p)?,
        Command::Residues => residues(p)?,
        Command::Classify => classify(p)?,
        Command::Reproduce => reproduce(p)?,
        Command::FlagCells => flag_cells(p)?,
        Command::BetheCheck => bethe_check(p)?,
        Command::Energies => energies(p)?,
        Command::SpectrumCrosscheck => spectrum(p)?,
        Command::LiftCover => lift_cover(p)?,
    };
    let mut metadata = metadata(p);
    if cmd == Command::SpectrumCrosscheck {
        let dual = cycloper::DualAlgebra::new(&p.alg).context("dual algebra")?;
        let rho: Vec<K> = dual.algebra().rho_check();
        let scale = dual.algebra().form(&rho, &rho) * &K::from_i64(2);
        metadata.push(Entry { key: "normalization 2(rho|rho)".into(), value: expr(p, &scale) });
    }
    Ok(Report { command: cmd.name().into(), metadata, sections })
}

fn metadata<K: Scalar>(p: &Problem<K>) -> Vec<Entry> {
    let cycles: Vec<String> = p
        .cycles
        .iter()
        .map(|c| format!("({})", c.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")))
        .collect();
    let mut out = vec![
        Entry { key: "algebra".into(), value: Value::Text(p.label.clone()) },
        Entry { key: "order".into(), value: Value::Count(p.order as usize) },
        Entry { key: "diagram cycles".into(), value: Value::Text(if cycles.is_empty() { "id".into() } else { cycles.join("") }) },
    ];
    for (name, v) in &p.bound {
        out.push(Entry { key: format!("parameter {name}"), value: Value::Expr(v.render(&[], Some(p.order))) });
    }
    if let Some(f) = &p.free {
        out.push(Entry { key: "free parameter".into(), value: Value::Text(f.clone()) });
    }
    out
}

fn expr<K: Scalar>(p: &Problem<K>, k: &K) -> Value {
    Value::Expr(p.scalar(k))
}

fn func<K: Scalar>(p: &Problem<K>, f: &RatFunc<K>) -> Value {
    Value::Expr(p.function(f))
}

fn vector<K: Scalar>(p: &Problem<K>, v: &[K]) -> Value {
    Value::Vector(v.iter().map(|k| p.scalar(k)).collect())
}

fn word(w: &WeylElement) -> Value {
    Value::Word(w.word().iter().map(|i| i + 1).collect())
}

/// Nonzero components of a Lie algebra element, keyed by basis label.
fn components<K: Scalar>(p: &Problem<K>, s: &mut Section, prefix: &str, v: &[RatFunc<K>]) {
    for (k, f) in v.iter().enumerate() {
        if !f.is_zero() {
            s.push(format!("{prefix}{}", p.alg.basis_label(k)), func(p, f));
        }
    }
}

fn constant_element<K: Scalar>(p: &Problem<K>, v: &[K]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| format!("({})*{}", p.scalar(c), p.alg.basis_label(k)))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn miura<K: Scalar>(p: &Problem<K>) -> Result<MiuraOper<K>, CliError> {
    build_miura(&p.alg, &p.sym, &p.lambda0, &p.w0, &p.sites, &p.extra).context("building the Miura oper")
}

fn miura_section<K: Scalar>(p: &Problem<K>, title: &str, m: &MiuraOper<K>) -> Section {
    let mut s = Section::new(title);
    for (i, f) in m.coweight_coords(&p.alg).iter().enumerate() {
        s.push(format!("coweight {}", i + 1), func(p, f));
    }
    s.push("cyclotomic", Value::Flag(m.check_cyclotomic(&p.alg, &p.sym)));
    s
}

fn integral_lambda0<K: Scalar>(p: &Problem<K>) -> Result<Vec<i64>, CliError> {
    p.lambda0_integral().ok_or_else(|| CliError::Core {
        context: "lambda0".into(),
        source: CoreError::NonIntegralCoweight(format!("[{}]", p.lambda0.iter().map(|k| p.scalar(k)).collect::<Vec<_>>().join(", "))),
    })
}

fn points<K: Scalar>(p: &Problem<K>) -> Vec<(String, Point<K>)> {
    let mut out = vec![("0".to_string(), Point::origin()), ("infinity".to_string(), Point::Infinity)];
    for s in &p.sites {
        out.push((p.scalar(&s.z), Point::Finite(s.z.clone())));
    }
    for e in &p.extra {
        out.push((p.scalar(&e.x), Point::Finite(e.x.clone())));
    }
    out
}

fn canonical<K: Scalar>(p: &Problem<K>) -> Result<Vec<Section>, CliError> {
    let m = miura(p)?;
    let can = canonical_representative(&p.alg, &m.connection(&p.alg), Some(&p.sym)).context("canonical form")?;
    let mut coeffs = Section::new("canonical");
    let mut seen: Vec<usize> = Vec::new();
    for (e, u) in can.exponents.iter().zip(&can.coeffs) {
        let n = seen.iter().filter(|&&x| x == *e).count();
        seen.push(*e);
        let key = if n == 0 { format!("u{e}") } else { format!("u{e}#{}", n + 1) };
        coeffs.push(key, func(p, u));
    }
    coeffs.push("input equivariant", Value::Flag(can.cyclotomic.unwrap_or(false)));
    let mut gauge = Section::new("gauge");
    gauge.push("form", Value::Text("exp(-m)".into()));
    components(p, &mut gauge, "m.", &can.m);
    Ok(vec![miura_section(p, "miura", &m), coeffs, gauge])
}

fn residues<K: Scalar>(p: &Problem<K>) -> Result<Vec<Section>, CliError> {
    let m = miura(p)?;
    let can = canonical_representative(&p.alg, &m.connection(&p.alg), None).context("canonical form")?;
    let mut ms = Section::new("miura residues");
    let mut os = Section::new("oper residues");
    for (name, pt) in points(p) {
        ms.push(name.clone(), vector(p, &m.residue(&p.alg, &pt)));
        let class = canonical_residue(&p.alg, &can, &pt).context("oper residue")?;
        os.push(name, vector(p, &class.coeffs));
    }
    Ok(vec![ms, os])
}

fn classify<K: Scalar>(p: &Problem<K>) -> Result<Vec<Section>, CliError> {
    let m = miura(p)?;
    let sites: Vec<(K, Vec<K>)> = p.sites.iter().map(|s| (s.z.clone(), s.coweight.clone())).collect();
    let extra: Vec<K> = p.extra.iter().map(|e| e.x.clone()).collect();
    let form = classify_general_form(&p.alg, &p.sym, &m, &p.lambda0, &sites, &extra).context("classification")?;
    let mut s = Section::new("general form");
    s.push("w0", word(&form.w0));
    for (i, w) in form.sites.iter().enumerate() {
        s.push(format!("site {} w", i + 1), word(w));
    }
    for (i, (x, y)) in form.extra.iter().enumerate() {
        s.push(format!("extra {} x", i + 1), expr(p, x));
        s.push(format!("extra {} y", i + 1), word(y));
    }
    s.push("res_inf", vector(p, &form.res_inf));
    s.push("w_inf", word(&form.w_inf));
    s.push("lambda_inf", vector(p, &form.lambda_inf));
    Ok(vec![s])
}

fn reproduce<K: Scalar>(p: &Problem<K>) -> Result<Vec<Section>, CliError> {
    let m = miura(p)?;
    let hints = p.hints();
    let mut seed = Section::new("seed");
    let rep = if let Some(x) = &p.options.g0 {
        let l0 = integral_lambda0(p)?;
        seed.push("g0", Value::Text(format!("exp(ad({}))", constant_element(p, x))));
        let g0 = p.alg.exp_ad(x);
        reproduce_generic(&p.alg, &p.sym, &m, &l0, &g0, &hints).context("generic reproduction")?
    } else {
        let k = p.options.orbit.ok_or_else(|| CliError::Validation("reproduce needs options.orbit or options.g0".into()))?;
        let mode = match p.options.branch {
            BranchSpec::Regular => RiccatiMode::General(p.options.constant.clone()),
            BranchSpec::Singular => RiccatiMode::SingularAtOrigin,
        };
        let q = m.pairing(&p.alg, k);
        let f = riccati_solve(&q, &mode, &hints).context("Riccati equation")?;
        if p.options.branch == BranchSpec::Regular && !f.is_regular_at(&Point::origin()) {
            return Err(CliError::Validation(format!(
                "integration constant {} gives a solution singular at the origin; use a nonzero constant or the singular branch",
                p.scalar(&p.options.constant)
            )));
        }
        seed.push("orbit", Value::Count(k + 1));
        seed.push("f", func(p, &f));
        reproduce_orbit_a1(&p.alg, &p.sym, &m, k, &f).context("orbit reproduction")?
    };
    let mut out = miura_section(p, "reproduced miura", &rep.miura);
    out.push(
        "branch",
        Value::Text(
            match rep.branch {
                Branch::RegularAtOrigin => "regular",
                Branch::SingularAtOrigin => "singular",
            }
            .into(),
        ),
    );
    let mut gauge = Section::new("gauge");
    if rep.gauge.in_unipotent(&p.alg) {
        gauge.push("form", Value::Text("exp(m)".into()));
        components(p, &mut gauge, "m.", &p.alg.log_unipotent(rep.gauge.matrix()));
    } else {
        gauge.push("form", Value::Text("matrix".into()));
        for (i, row) in rep.gauge.matrix().to_rows().iter().enumerate() {
            gauge.push(format!("row {}", i + 1), Value::Vector(row.iter().map(|f| p.function(f)).collect()));
        }
    }
    let l = &rep.ledger;
    let mut ledger = Section::new("residue ledger");
    ledger.push("res0 before", vector(p, &l.res0_before));
    ledger.push("res0 after", vector(p, &l.res0_after));
    ledger.push("res_inf before", vector(p, &l.res_inf_before));
    ledger.push("res_inf after", vector(p, &l.res_inf_after));
    Ok(vec![seed, out, gauge, ledger])
}

fn flag_cells<K: Scalar>(p: &Problem<K>) -> Result<Vec<Section>, CliError> {
    let l0 = integral_lambda0(p)?;
    let theta = p.sym.vartheta(&p.alg, &l0).context("vartheta")?;
    let cells = fixed_flag_cells(&p.alg, &theta).context("fixed flag cells")?;
    let mut summary = Section::new("summary");
    summary.push("cells", Value::Count(cells.len()));
    let mut out = vec![summary];
    for (i, c) in cells.iter().enumerate() {
        let mut s = Section::new(format!("cell {}", i + 1));
        s.push("w", word(&c.w));
        s.push("dimension", Value::Count(c.roots.len()));
        s.push("fixed dimension", Value::Count(c.fixed_dim()));
        for (j, v) in c.fixed_basis.iter().enumerate() {
            s.push(format!("fixed {}", j + 1), Value::Text(constant_element(p, v)));
        }
        out.push(s);
    }
    Ok(out)
}

fn gaudin<K: Scalar>(p: &Problem<K>) -> Result<GaudinModel<K>, CliError> {
    let g = p.gaudin.as_ref().ok_or_else(|| CliError::Validation("this command needs a `gaudin` block".into()))?;
    GaudinModel::new(&p.alg, p.sym.varsigma(), g.sites.clone(), g.colours.clone(), g.roots.clone()).context("Gaudin model")
}

fn bethe_check<K: Scalar>(p: &Problem<K>) -> Result<Vec<Section>, CliError> {
    let model = gaudin(p)?;
    let res = model.bethe_residuals();
    let mut s = Section::new("bethe equations");
    s.push("lambda0", vector(p, model.lambda0()));
    for (j, r) in res.iter().enumerate() {
        s.push(format!("root {}", j + 1), expr(p, r));
    }
    s.push("all zero", Value::Flag(res.iter().all(|r| r.is_zero())));
    Ok(vec![s])
}

fn energies<K: Scalar>(p: &Problem<K>) -> Result<Vec<Section>, CliError> {
    let model = gaudin(p)?;
    let mut s = Section::new("energies");
    for (i, e) in model.energies().iter().enumerate() {
        s.push(format!("site {}", i + 1), expr(p, e));
    }
    Ok(vec![s])
}

fn spectrum<K: Scalar>(p: &Problem<K>) -> Result<Vec<Section>, CliError> {
    let model = gaudin(p)?;
    let checks = model.energy_oper_identity().context("energy identity")?;
    let mut out = Vec::new();
    for (i, c) in checks.iter().enumerate() {
        let mut s = Section::new(format!("site {}", i + 1));
        s.push("energy", expr(p, &c.energy));
        s.push("lambda residue", expr(p, &c.lambda_residue));
        s.push("oper residue", expr(p, &c.oper_residue));
        s.push("consistent", Value::Flag(c.consistent()));
        out.push(s);
    }
    let mut inf = Section::new("infinity");
    inf.push("total weight", vector(p, &model.total_weight()));
    match model.weight_at_infinity() {
        Ok((w, lam)) => {
            inf.push("w_inf", word(&w));
            inf.push("lambda_inf", vector(p, &lam));
        }
        Err(e) => {
            inf.push("w_inf", Value::Text(format!("none: {e}")));
        }
    }
    out.push(inf);
    Ok(out)
}

fn lift_cover<K: Scalar>(p: &Problem<K>) -> Result<Vec<Section>, CliError> {
    let q = p.options.cover.ok_or_else(|| CliError::Validation("lift-cover needs options.cover".into()))?;
    let m = miura(p)?;
    let lifted = lift_to_cover(&m.connection(&p.alg), q as usize);
    let aut = cover_symmetry(&p.alg, &p.sym, q).context("cover symmetry")?;
    let mut s = Section::new("cover");
    s.push("degree", Value::Count(q as usize));
    s.push("cover order", Value::Count((q * p.order) as usize));
    s.push("equivariant", Value::Flag(lifted.is_equivariant(&aut)));
    s.push("coordinate", Value::Text(format!("t on the cover, base coordinate t^{q}")));
    components(p, &mut s, "A.", lifted.coeffs());
    Ok(vec![s])
}
