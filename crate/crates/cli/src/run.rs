//! Executes the checks of a parsed document.

use std::sync::Arc;
use std::time::Instant;

use mvstone::algebra::{
    all_ideals, chain_factorization, embed_max, find_isomorphism, hyper_archimedean, maximal_ideals, maximal_ideals_by_inclusion,
    prime_ideals,
};
use mvstone::duality::{
    check_liminary_duality, check_sfc, check_square, enumerate_cuts, is_lcc, is_limit_cut, max_space,
    unit_iso_algebra, unit_iso_space,
};
use mvstone::random::{random_topologies, RandomShape};
use mvstone::stone_n::{
    check_morphism_boole_n, check_morphism_brn, ideals_from_relation, max_n, max_n_morphism, relation_from_ideals,
    roundtrip_j, roundtrip_r, stone_n_of_algebra, stone_n_roundtrip, BooleNObject, FiniteBooleanAlgebra,
};
use mvstone::supernatural::{multiset_of, Supernatural};
use mvstone::topology::{
    check_continuous, check_continuous_closed_form, check_mv_topology, compactness, generate_from_base, hausdorff,
    hausdorff_odot, is_closed_map, is_homeomorphism, is_open_map, metric_ball_base, Distance, MvTopology,
};
use mvstone::{Bounds, Chain, FiniteMvAlgebra, FuzzySubset, MvError, ProductSignature, Result};

use crate::report::{CheckResult, Report, Verdict};
use crate::spec::{Check, Location, Object, SpecDocument, TopologyDecl};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub bounds: Bounds,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            bounds: Bounds::default(),
            seed: mvstone::random::DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{at}: {message}")]
pub struct UsageError {
    pub at: Location,
    pub message: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Arg {
    Algebra,
    Topology,
    Map,
    Metric,
    Chain,
    BooleN,
    BoolHom,
    Count,
}

/// Command name, fixed arguments, and whether more (radii) may follow.
const COMMANDS: &[(&str, &[Arg], bool)] = &[
    ("check-topology", &[Arg::Topology], false),
    ("hausdorff", &[Arg::Topology], false),
    ("compactness", &[Arg::Topology], false),
    ("skeleton", &[Arg::Topology], false),
    ("clopen", &[Arg::Topology], false),
    ("dualize-algebra", &[Arg::Algebra], false),
    ("dualize-space", &[Arg::Topology], false),
    ("roundtrip-algebra", &[Arg::Algebra], false),
    ("roundtrip-space", &[Arg::Topology], false),
    ("square", &[Arg::Algebra], false),
    ("cuts", &[Arg::Algebra], false),
    ("lcc", &[Arg::Algebra], false),
    ("factorize", &[Arg::Algebra], false),
    ("multiset", &[Arg::Algebra], false),
    ("boolen-convert", &[Arg::BooleN], false),
    ("boolen-roundtrip", &[Arg::BooleN], false),
    ("boolen-morphism", &[Arg::BoolHom, Arg::BooleN, Arg::BooleN], false),
    ("stone-n-dualize", &[Arg::BooleN], false),
    ("stone-n-of", &[Arg::Algebra, Arg::Count], false),
    ("maximal-ideals", &[Arg::Algebra], false),
    ("ideals", &[Arg::Algebra], false),
    ("continuity", &[Arg::Map, Arg::Topology, Arg::Topology], false),
    ("metric", &[Arg::Metric, Arg::Chain], true),
    ("hyper-archimedean", &[Arg::Algebra], false),
    ("liminary", &[Arg::Algebra], false),
    ("sfc", &[Arg::Algebra], false),
    ("isomorphic", &[Arg::Algebra, Arg::Algebra], false),
    ("hausdorff-sample", &[Arg::Count], false),
];

const SUPERNATURAL_OPS: &[(&str, usize)] = &[
    ("leq", 2),
    ("lt", 2),
    ("join", 2),
    ("meet", 2),
    ("basic-open", 2),
    ("factor", 1),
];

fn kind_matches(arg: Arg, object: &Object) -> bool {
    matches!(
        (arg, object),
        (Arg::Algebra, Object::Algebra(_))
            | (Arg::Topology, Object::Topology(_))
            | (Arg::Map, Object::Map(_))
            | (Arg::Metric, Object::Metric(_))
            | (Arg::Chain, Object::Chain(_))
            | (Arg::BooleN, Object::BooleN(_))
            | (Arg::BoolHom, Object::BoolHom(_))
    )
}

fn arg_name(arg: Arg) -> &'static str {
    match arg {
        Arg::Algebra => "algebra",
        Arg::Topology => "topology",
        Arg::Map => "map",
        Arg::Metric => "metric",
        Arg::Chain => "chain",
        Arg::BooleN => "boolen object",
        Arg::BoolHom => "boolean homomorphism",
        Arg::Count => "positive integer",
    }
}

/// Checks command names, arity and argument kinds before anything runs.
pub fn validate(doc: &SpecDocument) -> std::result::Result<(), UsageError> {
    for check in &doc.checks {
        let fail = |message: String| UsageError { at: check.at, message };
        if check.command == "supernatural" {
            let Some(op) = check.args.first() else {
                return Err(fail("supernatural needs an operation".into()));
            };
            let Some(&(_, arity)) = SUPERNATURAL_OPS.iter().find(|(n, _)| n == op) else {
                return Err(fail(format!("unknown supernatural operation `{op}`")));
            };
            if check.args.len() != arity + 1 {
                return Err(fail(format!("supernatural {op} takes {arity} arguments")));
            }
            for a in &check.args[1..] {
                supernatural_arg(doc, a).map_err(|e| fail(e.to_string()))?;
            }
            continue;
        }
        let Some(&(_, params, variadic)) = COMMANDS.iter().find(|(n, _, _)| *n == check.command) else {
            return Err(fail(format!("unknown command `{}`", check.command)));
        };
        if check.args.len() < params.len() || (!variadic && check.args.len() > params.len()) {
            return Err(fail(format!(
                "{} takes {} argument{}",
                check.command,
                params.len(),
                if params.len() == 1 { "" } else { "s" }
            )));
        }
        for (i, a) in check.args.iter().enumerate() {
            match params.get(i) {
                Some(Arg::Count) => {
                    if !a.parse::<u64>().is_ok_and(|n| n > 0) {
                        return Err(fail(format!("`{a}` is not a positive integer")));
                    }
                }
                Some(&p) => match doc.get(a) {
                    None => return Err(fail(format!("unresolved reference `{a}`"))),
                    Some(o) if !kind_matches(p, o) => {
                        return Err(fail(format!("`{a}` is a {}, expected a {}", o.kind(), arg_name(p))))
                    }
                    Some(_) => {}
                },
                None => {
                    if parse_distance(a).is_none() {
                        return Err(fail(format!("`{a}` is not a positive radius")));
                    }
                }
            }
        }
    }
    Ok(())
}

fn parse_distance(s: &str) -> Option<Distance> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.parse().ok()?, q.parse().ok()?),
        None => (s.parse().ok()?, 1),
    };
    (p > 0 && q > 0).then(|| Distance::new(p, q))
}

fn supernatural_arg(doc: &SpecDocument, a: &str) -> Result<Supernatural> {
    match doc.get(a) {
        Some(Object::Supernatural(s)) => Ok(s.clone()),
        Some(o) => Err(MvError::InvalidArgument(format!("`{a}` is a {}", o.kind()))),
        None => a.parse(),
    }
}

struct Ctx<'a> {
    doc: &'a SpecDocument,
    opts: Options,
}

struct Out {
    fields: Vec<(String, String)>,
}

impl Out {
    fn put(&mut self, key: impl Into<String>, value: impl ToString) {
        self.fields.push((key.into(), value.to_string()));
    }
}

fn set_of(items: impl IntoIterator<Item = String>) -> String {
    format!("{{{}}}", items.into_iter().collect::<Vec<_>>().join(", "))
}

fn element_set(a: &FiniteMvAlgebra, members: &[usize]) -> String {
    set_of(members.iter().map(|&m| a.format_element(m)))
}

fn point_set(t: &FuzzySubset) -> String {
    set_of(t.full_points().into_iter().map(|p| t.universe().name(p).to_string()))
}

impl Ctx<'_> {
    fn algebra(&self, name: &str) -> Arc<FiniteMvAlgebra> {
        match self.doc.get(name) {
            Some(Object::Algebra(a)) => a.clone(),
            _ => unreachable!("validated"),
        }
    }

    fn boolen(&self, name: &str) -> &BooleNObject {
        match self.doc.get(name) {
            Some(Object::BooleN(b)) => b,
            _ => unreachable!("validated"),
        }
    }

    fn topology(&self, name: &str) -> Result<MvTopology> {
        match self.doc.get(name) {
            Some(Object::Topology(d)) => match d {
                TopologyDecl::Ready(t) => Ok(t.clone()),
                TopologyDecl::Family { universe, chain, opens } => {
                    MvTopology::new(universe.clone(), *chain, opens.clone())
                }
                TopologyDecl::Base { universe, chain, base } => generate_from_base(universe, *chain, base),
                TopologyDecl::Dual(a) => Ok(max_space(&self.algebra(a), &self.opts.bounds)?.space),
            },
            _ => unreachable!("validated"),
        }
    }

    fn run(&self, check: &Check, out: &mut Out) -> Result<bool> {
        let a = &check.args;
        let b = &self.opts.bounds;
        match check.command.as_str() {
            "check-topology" => self.check_topology(&a[0], out),
            "hausdorff" => {
                let t = self.topology(&a[0])?;
                let h = hausdorff(&t);
                let h2 = hausdorff_odot(&t);
                out.put("pairs", h.pairs.len());
                out.put("separated", h.pairs.iter().filter(|p| p.witness.is_some()).count());
                for p in &h.pairs {
                    let key = format!("pair.{}.{}", t.universe().name(p.x), t.universe().name(p.y));
                    match &p.witness {
                        Some((ox, oy)) => out.put(key, format!("{ox} / {oy}")),
                        None => out.put(key, "unseparated"),
                    }
                }
                out.put("odot_form_agrees", h.holds == h2.holds);
                if let Some((x, y)) = h.first_failure() {
                    out.put("unseparated", format!("{} {}", t.universe().name(x), t.universe().name(y)));
                }
                Ok(h.holds)
            }
            "compactness" => {
                let t = self.topology(&a[0])?;
                let r = compactness(&t, b)?;
                out.put("minimal_coverings", r.minimal_coverings.len());
                for (i, cover) in r.minimal_coverings.iter().enumerate() {
                    out.put(format!("covering.{i}"), set_of(cover.iter().map(|o| o.to_string())));
                    if let Some(Some(sub)) = r.additive_subcovers.get(i) {
                        out.put(
                            format!("additive.{i}"),
                            set_of(sub.iter().map(|(o, k)| format!("{k}*{o}"))),
                        );
                    }
                }
                out.put("compact", r.compact);
                out.put("strongly_compact", r.strongly_compact);
                out.put("finite_scale", r.finite_scale);
                Ok(r.compact && r.strongly_compact)
            }
            "skeleton" => {
                let t = self.topology(&a[0])?;
                let sk = t.skeleton()?;
                let mut crisp: Vec<FuzzySubset> = t
                    .opens()
                    .iter()
                    .filter(|o| o.is_crisp())
                    .filter_map(|o| o.to_chain(Chain::BOOLEAN))
                    .collect();
                let mut deltas: Vec<FuzzySubset> = t
                    .opens()
                    .iter()
                    .filter_map(|o| o.baaz_delta().to_chain(Chain::BOOLEAN))
                    .collect();
                crisp.sort();
                deltas.sort();
                deltas.dedup();
                for (i, o) in sk.opens().iter().enumerate() {
                    out.put(format!("open.{i}"), o);
                }
                let identity = crisp == deltas && crisp.iter().eq(sk.opens().iter());
                out.put("identity", identity);
                Ok(identity)
            }
            "clopen" => {
                let t = self.topology(&a[0])?;
                let clopens = t.clopens();
                out.put("clopens", clopens.len());
                for (i, c) in clopens.iter().enumerate() {
                    out.put(format!("clopen.{i}"), c);
                }
                Ok(true)
            }
            "dualize-algebra" => {
                let alg = self.algebra(&a[0]);
                let d = max_space(&alg, b)?;
                out.put("points", d.universe().len());
                for (p, m) in d.hat.maximal.iter().enumerate() {
                    let name = d.universe().name(p);
                    out.put(format!("point.{name}.ideal"), m.ideal.format(&alg));
                    out.put(format!("point.{name}.quotient"), format!("L{}", d.hat.quotient_orders[p]));
                }
                out.put("grid", format!("L{}", d.hat.chain.order()));
                for x in 0..alg.len() {
                    out.put(format!("hat.{}", alg.format_element(x)), d.hat_of(x));
                }
                out.put("opens", d.space.len());
                out.put("stone", d.stone.stone);
                Ok(d.stone.stone)
            }
            "dualize-space" => {
                let t = self.topology(&a[0])?;
                let clop = t.clopen_algebra()?;
                out.put("elements", clop.len());
                let factors = chain_factorization(&clop, b)?;
                out.put("factors", factors.iter().map(|k| format!("L{k}")).collect::<Vec<_>>().join(" x "));
                for x in 0..clop.len() {
                    out.put(format!("element.{x}"), t.table_of(clop.element(x))?);
                }
                Ok(true)
            }
            "roundtrip-algebra" => {
                let alg = self.algebra(&a[0]);
                let u = unit_iso_algebra(&alg, b)?;
                out.put("points", u.dual.universe().len());
                out.put("clop_elements", u.clop.len());
                for x in 0..alg.len() {
                    let image = u.iso.apply(x);
                    out.put(format!("iso.{}", alg.format_element(x)), u.clop.format_element(image));
                }
                Ok(u.iso.is_bijective())
            }
            "roundtrip-space" => {
                let t = self.topology(&a[0])?;
                match unit_iso_space(&t, b) {
                    Ok(u) => {
                        out.put("clop_elements", u.clop.len());
                        for x in 0..t.universe().len() {
                            out.put(format!("map.{}", t.universe().name(x)), u.dual.universe().name(u.map.apply(x)));
                        }
                        Ok(true)
                    }
                    Err(MvError::NotStone(reason)) => {
                        out.put("not_stone", reason);
                        Ok(false)
                    }
                    Err(e) => Err(e),
                }
            }
            "square" => {
                let alg = self.algebra(&a[0]);
                let s = check_square(&alg, b)?;
                out.put("point_map", s.point_map.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "));
                out.put("spaces_agree", s.spaces_agree);
                out.put("algebras_agree", s.algebras_agree);
                out.put("center_isomorphic", s.center_isomorphic);
                Ok(s.holds)
            }
            "cuts" => {
                let alg = self.algebra(&a[0]);
                let hat = embed_max(&alg, b)?;
                let census = enumerate_cuts(&alg, b);
                out.put("cuts", census.cuts.len());
                out.put("exhaustive", census.exhaustive);
                out.put("subsets_examined", census.subsets_examined);
                let mut limits = 0;
                for (i, c) in census.cuts.iter().enumerate() {
                    let limit = is_limit_cut(&alg, &hat, c);
                    limits += usize::from(limit);
                    out.put(format!("cut.{i}"), element_set(&alg, c.members()));
                    out.put(format!("cut.{i}.limit"), limit);
                }
                out.put("limit_cuts", limits);
                Ok(true)
            }
            "lcc" => {
                let alg = self.algebra(&a[0]);
                let r = is_lcc(&alg, b)?;
                out.put("cuts", r.cuts);
                out.put("limit_cuts", r.limit_cuts);
                out.put("exhaustive", r.exhaustive);
                out.put("with_supremum", r.with_supremum);
                out.put("meets_agree", r.meets_agree);
                out.put("partners_ok", r.partners_ok);
                out.put("lcc", r.lcc);
                Ok(r.lcc && r.meets_agree && r.partners_ok)
            }
            "factorize" => {
                let alg = self.algebra(&a[0]);
                let orders = chain_factorization(&alg, b)?;
                out.put("factors", orders.iter().map(|k| format!("L{k}")).collect::<Vec<_>>().join(" x "));
                let product = Arc::new(FiniteMvAlgebra::full_product(ProductSignature::from_orders(&orders)?));
                let iso = find_isomorphism(&alg, &product, b)?;
                if let Some(iso) = &iso {
                    for x in 0..alg.len() {
                        out.put(format!("iso.{}", alg.format_element(x)), product.format_element(iso.apply(x)));
                    }
                }
                out.put("certified", iso.is_some());
                Ok(iso.is_some())
            }
            "multiset" => {
                let alg = self.algebra(&a[0]);
                out.put("multiset", multiset_of(&alg, b)?);
                Ok(true)
            }
            "boolen-convert" => {
                let bn = self.boolen(&a[0]);
                let alg = bn.algebra();
                let r = relation_from_ideals(bn)?;
                out.put("relation.size", r.relation().len());
                for (i, t) in r.relation().iter().enumerate() {
                    out.put(format!("tuple.{i}"), tuple(alg, t));
                }
                let axioms = r.axiom_violation();
                out.put("axioms", axioms.as_deref().unwrap_or("ok"));
                let back = ideals_from_relation(&r)?;
                for i in 1..bn.n() {
                    out.put(format!("J{i}"), back.ideal(i).format(alg));
                }
                Ok(axioms.is_none() && back == *bn)
            }
            "boolen-roundtrip" => {
                let bn = self.boolen(&a[0]);
                let alg = bn.algebra();
                let rj = roundtrip_j(bn)?;
                let r = relation_from_ideals(bn)?;
                let rr = roundtrip_r(&r)?;
                let back = ideals_from_relation(&r)?;
                for i in 1..bn.n() {
                    out.put(format!("J{i}"), bn.ideal(i).format(alg));
                    out.put(format!("J{i}.roundtrip"), back.ideal(i).format(alg));
                }
                out.put("ideals_roundtrip", rj.holds);
                out.put("relation_roundtrip", rr.holds);
                for (k, v) in [("ideals", &rj), ("relation", &rr)] {
                    if let Some(c) = &v.counterexample {
                        out.put(format!("{k}.counterexample"), c);
                    }
                }
                Ok(rj.holds && rr.holds)
            }
            "boolen-morphism" => {
                let f = match self.doc.get(&a[0]) {
                    Some(Object::BoolHom(f)) => f,
                    _ => unreachable!("validated"),
                };
                let (from, to) = (self.boolen(&a[1]), self.boolen(&a[2]));
                let v = check_morphism_boole_n(f, from, to)?;
                let vr = check_morphism_brn(f, &relation_from_ideals(from)?, &relation_from_ideals(to)?)?;
                out.put("boole_n", v.holds);
                if let Some(c) = &v.counterexample {
                    out.put("witness", c);
                }
                out.put("br_n", vr.holds);
                out.put("conversions_agree", v.holds == vr.holds);
                if v.holds {
                    let (g, dual) = max_n_morphism(f, from, to, b)?;
                    out.put(
                        "dual_map",
                        g.assignment().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" "),
                    );
                    out.put("stone_n", dual.holds);
                }
                Ok(v.holds)
            }
            "stone-n-dualize" => {
                let bn = self.boolen(&a[0]);
                let (_, sn) = max_n(bn, b)?;
                out.put("points", sn.space().universe().len());
                for i in 1..bn.n() {
                    out.put(format!("o{i}"), point_set(sn.open(i)));
                }
                let back = mvstone::stone_n::clop_n(&sn)?;
                for i in 1..bn.n() {
                    out.put(format!("I{i}"), back.ideal(i).format(back.algebra()));
                }
                let rt = stone_n_roundtrip(bn, b)?;
                let alg = bn.algebra();
                for x in alg.elements() {
                    out.put(format!("iso.{}", alg.format(x)), back.algebra().format(rt.algebra_iso[x as usize]));
                }
                out.put("algebra_side", rt.algebra_side.holds);
                out.put("space_side", rt.space_side.holds);
                Ok(rt.algebra_side.holds && rt.space_side.holds)
            }
            "stone-n-of" => {
                let alg = self.algebra(&a[0]);
                let n: u32 = a[1].parse().map_err(|_| MvError::InvalidArgument("n".into()))?;
                let sn = stone_n_of_algebra(&alg, n, b)?;
                for i in 1..n {
                    out.put(format!("o{i}"), point_set(sn.open(i)));
                }
                Ok(true)
            }
            "maximal-ideals" => {
                let alg = self.algebra(&a[0]);
                let maxes = maximal_ideals(&alg, b)?;
                let by_inclusion = maximal_ideals_by_inclusion(&alg, b)?;
                out.put("count", maxes.len());
                for (i, m) in maxes.iter().enumerate() {
                    out.put(format!("ideal.{i}"), m.ideal.format(&alg));
                    let cert: Vec<String> = m
                        .certificate
                        .iter()
                        .map(|&(x, n)| format!("{}:{n}", alg.format_element(x)))
                        .collect();
                    out.put(format!("ideal.{i}.certificate"), cert.join(" "));
                }
                let agree = maxes.iter().map(|m| &m.ideal).eq(by_inclusion.iter());
                out.put("agrees_with_inclusion", agree);
                Ok(agree && maxes.iter().all(|m| m.verify(&alg)))
            }
            "ideals" => {
                let alg = self.algebra(&a[0]);
                let ideals = all_ideals(&alg, b)?;
                let primes = prime_ideals(&alg, b)?;
                let maxes = maximal_ideals(&alg, b)?;
                out.put("count", ideals.len());
                for (i, id) in ideals.iter().enumerate() {
                    let mut tags = Vec::new();
                    if primes.contains(id) {
                        tags.push("prime");
                    }
                    if maxes.iter().any(|m| m.ideal == *id) {
                        tags.push("maximal");
                    }
                    out.put(format!("ideal.{i}"), id.format(&alg));
                    if !tags.is_empty() {
                        out.put(format!("ideal.{i}.kind"), tags.join(" "));
                    }
                }
                Ok(true)
            }
            "continuity" => {
                let f = match self.doc.get(&a[0]) {
                    Some(Object::Map(f)) => f,
                    _ => unreachable!("validated"),
                };
                let (t, s) = (self.topology(&a[1])?, self.topology(&a[2])?);
                let v = check_continuous(f, &t, &s)?;
                let vc = check_continuous_closed_form(f, &t, &s)?;
                out.put("continuous", v.holds);
                if let Some(w) = &v.witness {
                    out.put("witness", w);
                }
                out.put("closed_form_agrees", v.holds == vc.holds);
                out.put("open_map", is_open_map(f, &t, &s)?.holds);
                out.put("closed_map", is_closed_map(f, &t, &s)?.holds);
                out.put("homeomorphism", is_homeomorphism(f, &t, &s)?);
                Ok(v.holds)
            }
            "metric" => {
                let m = match self.doc.get(&a[0]) {
                    Some(Object::Metric(m)) => m,
                    _ => unreachable!("validated"),
                };
                let chain = match self.doc.get(&a[1]) {
                    Some(Object::Chain(c)) => *c,
                    _ => unreachable!("validated"),
                };
                let mut radii: Vec<Distance> = a[2..].iter().filter_map(|r| parse_distance(r)).collect();
                if radii.is_empty() {
                    radii.push(Distance::from_integer(1));
                }
                let r = metric_ball_base(m, chain, &radii)?;
                out.put("balls", r.balls.len());
                out.put("base", r.base.len());
                out.put("opens", r.topology.len());
                for (i, o) in r.topology.opens().iter().enumerate() {
                    out.put(format!("open.{i}"), o);
                }
                out.put("ball_joins_are_topology", r.literal_violation.is_none());
                if let Some(v) = &r.literal_violation {
                    out.put("ball_joins_violation", v);
                }
                out.put("constructions_agree", r.agree);
                Ok(true)
            }
            "hyper-archimedean" => {
                let alg = self.algebra(&a[0]);
                let r = hyper_archimedean(&alg);
                let opt = |o: Option<u32>| o.map_or("none".to_string(), |n| n.to_string());
                for row in &r.rows {
                    out.put(
                        format!("element.{}", alg.format_element(row.element)),
                        format!(
                            "{} {} {}",
                            opt(row.boolean_multiple),
                            opt(row.complement_join),
                            opt(row.stable_multiple)
                        ),
                    );
                }
                out.put("conditions_agree", r.conditions_agree);
                out.put("hyper_archimedean", r.hyper_archimedean);
                Ok(r.conditions_agree && r.hyper_archimedean)
            }
            "liminary" => {
                let alg = self.algebra(&a[0]);
                let r = check_liminary_duality(&alg, b)?;
                out.put("liminary", r.liminary);
                out.put("dual_strongly_compact", r.dual_strongly_compact);
                out.put("clop_liminary", r.clop_liminary);
                out.put("lcc", r.lcc);
                Ok(r.holds)
            }
            "sfc" => {
                let alg = self.algebra(&a[0]);
                let r = check_sfc(&alg, b)?;
                out.put(
                    "quotients",
                    r.quotient_orders.iter().map(|k| format!("L{k}")).collect::<Vec<_>>().join(" "),
                );
                out.put("sfc", r.sfc);
                out.put("lcc", r.lcc);
                out.put("classes_agree_vacuously", r.classes_agree_vacuously);
                Ok(r.sfc && r.lcc)
            }
            "isomorphic" => {
                let (x, y) = (self.algebra(&a[0]), self.algebra(&a[1]));
                let iso = find_isomorphism(&x, &y, b)?;
                out.put("isomorphic", iso.is_some());
                if let Some(iso) = &iso {
                    for e in 0..x.len() {
                        out.put(format!("iso.{}", x.format_element(e)), y.format_element(iso.apply(e)));
                    }
                }
                Ok(iso.is_some())
            }
            "hausdorff-sample" => {
                let count: usize = a[0].parse().map_err(|_| MvError::InvalidArgument("count".into()))?;
                let tops = random_topologies(self.opts.seed, count, RandomShape::default())?;
                let mut hausdorff_count = 0;
                let mut disagreements = 0;
                for t in &tops {
                    let h = hausdorff(t).holds;
                    hausdorff_count += usize::from(h);
                    disagreements += usize::from(h != hausdorff_odot(t).holds);
                }
                out.put("seed", self.opts.seed);
                out.put("samples", tops.len());
                out.put("hausdorff", hausdorff_count);
                out.put("disagreements", disagreements);
                Ok(disagreements == 0)
            }
            "supernatural" => self.supernatural(a, out),
            other => unreachable!("validated command {other}"),
        }
    }

    fn check_topology(&self, name: &str, out: &mut Out) -> Result<bool> {
        let family = match self.doc.get(name) {
            Some(Object::Topology(TopologyDecl::Family { universe, chain, opens })) => {
                Some((universe.clone(), *chain, opens.clone()))
            }
            _ => None,
        };
        let Some((u, chain, opens)) = family else {
            let t = self.topology(name)?;
            out.put("opens", t.len());
            return Ok(true);
        };
        match check_mv_topology(&u, chain, &opens)? {
            None => {
                let t = MvTopology::new(u, chain, opens)?;
                out.put("opens", t.len());
                Ok(true)
            }
            Some(v) => {
                out.put("clause", v.clause.label());
                out.put("left", &v.left);
                if let Some(r) = &v.right {
                    out.put("right", r);
                }
                out.put("missing", &v.missing);
                Ok(false)
            }
        }
    }

    fn supernatural(&self, a: &[String], out: &mut Out) -> Result<bool> {
        let arg = |i: usize| supernatural_arg(self.doc, &a[i]);
        let result = match a[0].as_str() {
            "leq" => arg(1)?.leq(&arg(2)?).to_string(),
            "lt" => arg(1)?.lt(&arg(2)?).to_string(),
            "join" => arg(1)?.join(&arg(2)?).to_string(),
            "meet" => arg(1)?.meet(&arg(2)?).to_string(),
            "basic-open" => {
                let n: u64 = a[2]
                    .parse()
                    .map_err(|_| MvError::InvalidArgument(format!("`{}` is not a natural number", a[2])))?;
                arg(1)?.in_basic_open(n)?.to_string()
            }
            "factor" => arg(1)?.to_string(),
            other => unreachable!("validated op {other}"),
        };
        out.put("result", result);
        Ok(true)
    }
}

fn tuple(alg: FiniteBooleanAlgebra, t: &[u32]) -> String {
    format!("({})", t.iter().map(|&x| alg.format(x)).collect::<Vec<_>>().join(", "))
}

/// Runs every check in order. Errors inside a check become its verdict.
pub fn run(doc: &SpecDocument, opts: Options) -> Report {
    let ctx = Ctx { doc, opts };
    let mut report = Report::default();
    for check in &doc.checks {
        let start = Instant::now();
        let mut out = Out { fields: Vec::new() };
        let verdict = match ctx.run(check, &mut out) {
            Ok(true) => Verdict::Pass,
            Ok(false) => Verdict::Fail,
            Err(e) => {
                out.put("error", &e);
                if e.is_resource() {
                    Verdict::Resource
                } else {
                    Verdict::Fail
                }
            }
        };
        report.checks.push(CheckResult {
            command: check.command.clone(),
            args: check.args.clone(),
            line: check.at.line,
            verdict,
            fields: out.fields,
            elapsed: start.elapsed(),
        });
    }
    report
}
