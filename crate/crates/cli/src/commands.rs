use serde_json::{json, Value};

use reflexive_core::bounds::{enumerate_admissible, table_c};
use reflexive_core::delzant::{
    edge_data, is_delzant, is_reflexive, relative_length, verify_12_24, verify_gorenstein,
    verify_index_corollary, verify_length_decomposition, verify_main_theorem,
    verify_thm_combinatorics2,
};
use reflexive_core::gkm::{self, GkmGraph};
use reflexive_core::io::{
    AdmissibleJson, GraphJson, Num, PolytopeJson, ReportJson, RootRequest, RootResponse,
    TableCellJson,
};
use reflexive_core::oracle::{brute_f_vector, cross_check, dual_edge_lengths_check};
use reflexive_core::{
    catalog, io, Error, Integer, ItemResult, LatticeVector, Polytope, Result, RootSystem,
    RootType, VerificationReport,
};

use crate::input::{self, Input};
use crate::{CheckKind, Output};

fn value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn ints(v: &[Integer]) -> Value {
    Value::Array(v.iter().map(|i| value(&Num::from(i))).collect())
}

fn report_output(rep: VerificationReport) -> Output {
    Output {
        json: value(&ReportJson::from(&rep)),
        text: rep.to_string(),
        pass: rep.pass,
    }
}

fn reflexive_report(p: &Polytope) -> VerificationReport {
    let mut items: Vec<ItemResult> = p
        .facets()
        .iter()
        .enumerate()
        .map(|(i, h)| {
            ItemResult::new(
                format!("facet:{i}"),
                h.offset() == &reflexive_core::Rational::from_integer(1.into()),
                format!("<{}, x> <= {}", h.normal(), h.offset()),
            )
        })
        .collect();
    for (i, v) in p.vertices().iter().enumerate() {
        items.push(ItemResult::new(
            format!("lattice:v{i}"),
            v.to_lattice().is_some(),
            format!("{v}"),
        ));
    }
    let rep = VerificationReport::from_items("reflexive", items);
    debug_assert_eq!(rep.pass, is_reflexive(p));
    rep
}

fn gorenstein_report(g: &GkmGraph) -> Result<VerificationReport> {
    match gkm::gorenstein_index(g) {
        Ok(cert) => {
            let items = g
                .vertices()
                .iter()
                .zip(&cert.residuals)
                .map(|(v, res)| {
                    ItemResult::new(
                        format!("v:{}", v.id),
                        res.is_zero(),
                        format!("weight sum + r v = {res}"),
                    )
                })
                .collect();
            Ok(VerificationReport::equality(
                "gorenstein-index",
                cert.r.clone(),
                vec![cert.r],
                items,
            ))
        }
        Err(e @ (Error::Inconsistent | Error::NonPositive)) => Ok(VerificationReport::from_items(
            "gorenstein-index",
            vec![ItemResult::new("index", false, e.to_string())],
        )),
        Err(e) => Err(e),
    }
}

pub fn check(which: CheckKind, source: Option<&str>) -> Result<Output> {
    let inp = input::load(source)?;
    let rep = match which {
        CheckKind::Delzant => {
            let p = inp.polytope()?;
            is_delzant(&p).to_report(&p)
        }
        CheckKind::Reflexive => reflexive_report(&inp.polytope()?),
        CheckKind::Gkm => gkm::validate(&inp.skeleton()),
        CheckKind::Gorenstein => gorenstein_report(&inp.skeleton())?,
    };
    Ok(report_output(rep))
}

fn with_polytope_oracle(rep: &mut VerificationReport, p: &Polytope, identity: &str) {
    rep.merge_items(cross_check(p));
    if identity == "main" || identity == "12-24" {
        if let Ok(d) = dual_edge_lengths_check(p) {
            rep.merge_items(d);
        }
    }
}

pub fn verify(identity: &str, source: Option<&str>, oracle: bool) -> Result<Output> {
    let inp = input::load(source)?;
    if identity == "graph-corollary" {
        let oracle_target = match &inp {
            Input::Polytope(p) if oracle => Some(p.clone()),
            _ => None,
        };
        let mut rep = gkm::verify_graph_corollary(&inp.graph()?)?;
        if let Some(p) = oracle_target {
            rep.merge_items(cross_check(&p));
        }
        return Ok(report_output(rep));
    }
    let p = inp.polytope()?;
    let mut rep = match identity {
        "main" => verify_main_theorem(&p)?,
        "12-24" => verify_12_24(&p)?,
        "combinatorics2" => verify_thm_combinatorics2(&p)?,
        "length-decomposition" => verify_length_decomposition(&p)?,
        "index-corollary" => verify_index_corollary(&p)?,
        other => match other.strip_prefix("gorenstein:") {
            Some(r) => {
                let r: Integer = r
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidArgument(format!("bad index {r}")))?;
                verify_gorenstein(&p, &r)?
            }
            None => return Err(Error::InvalidArgument(format!("unknown identity {other}"))),
        },
    };
    if oracle {
        with_polytope_oracle(&mut rep, &p, identity);
    }
    Ok(report_output(rep))
}

fn polytope_text(p: &Polytope) -> String {
    let mut s = format!("dim {}\nvertices:\n", p.dim());
    for v in p.vertices() {
        s += &format!("  {v}\n");
    }
    s += "facets:\n";
    for h in p.facets() {
        s += &format!("  <{}, x> <= {}\n", h.normal(), h.offset());
    }
    s
}

pub fn dual(source: Option<&str>) -> Result<Output> {
    let d = input::load(source)?.polytope()?.dual()?;
    Ok(Output {
        json: value(&PolytopeJson::from_polytope(&d)),
        text: polytope_text(&d),
        pass: true,
    })
}

pub fn fvector(source: Option<&str>, oracle: bool) -> Result<Output> {
    let p = input::load(source)?.polytope()?;
    let f = p.f_vector();
    let mut json = json!({ "f_vector": ints(&f.0) });
    let mut text = format!("f = {f}");
    let mut pass = true;
    if oracle {
        let g = brute_f_vector(&p);
        pass = g == f;
        json["oracle"] = json!({ "f_vector": ints(&g.0), "pass": pass });
        text += &format!("\noracle f = {g} ({})", if pass { "agrees" } else { "DIFFERS" });
    }
    Ok(Output { json, text, pass })
}

fn parse_xi(xi: Option<&str>) -> Result<Option<LatticeVector>> {
    let Some(s) = xi else {
        return Ok(None);
    };
    let coords = s
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<Integer>()
                .map_err(|_| Error::InvalidArgument(format!("bad direction component {c:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Some(LatticeVector::new(coords)))
}

fn check_xi_dim(xi: &Option<LatticeVector>, dim: usize) -> Result<()> {
    match xi {
        Some(x) if x.dim() != dim => Err(Error::DimensionMismatch {
            expected: dim,
            found: x.dim(),
        }),
        _ => Ok(()),
    }
}

pub fn hvector(source: Option<&str>, xi: Option<&str>) -> Result<Output> {
    let xi = parse_xi(xi)?;
    match input::load(source)? {
        Input::Polytope(p) => {
            check_xi_dim(&xi, p.dim())?;
            if !p.is_simple() {
                return Err(Error::NotSimple);
            }
            let comb = p.h_vector_comb();
            let directed = p.h_vector_directed(xi.as_ref())?;
            let pass = comb == directed;
            Ok(Output {
                json: json!({
                    "h_comb": ints(&comb.0),
                    "h_directed": ints(&directed.0),
                    "xi": xi.as_ref().map(|x| ints(x.coords())),
                    "agree": pass,
                }),
                text: format!("h (face numbers) = {comb}\nh (in-degrees)   = {directed}"),
                pass,
            })
        }
        Input::Graph(g) => {
            check_xi_dim(&xi, g.ambient_dim())?;
            let h = gkm::h_vector_graph(&g, xi.as_ref())?;
            Ok(Output {
                json: json!({ "h_directed": ints(&h.0), "xi": xi.as_ref().map(|x| ints(x.coords())) }),
                text: format!("h (in-degrees) = {h}"),
                pass: true,
            })
        }
    }
}

pub fn lengths(source: Option<&str>, oracle: bool) -> Result<Output> {
    match input::load(source)? {
        Input::Polytope(p) => {
            let mut rows = Vec::new();
            let mut text = String::new();
            let mut total = Integer::from(0);
            let contributions = if is_delzant(&p).overall {
                edge_data(&p).ok()
            } else {
                None
            };
            for (e, &(a, b)) in p.edges().iter().enumerate() {
                let l = relative_length(&p, e)?;
                let (u, v) = (p.vertex(a), p.vertex(b));
                let mut row = json!({
                    "u": value(&u.coords().iter().cloned().map(Num).collect::<Vec<_>>()),
                    "v": value(&v.coords().iter().cloned().map(Num).collect::<Vec<_>>()),
                    "length": value(&Num::from(&l)),
                });
                text += &format!("{u} -- {v}  l = {l}");
                if let Some(data) = &contributions {
                    let d = &data[e];
                    let a: Vec<Integer> = d.contributions.iter().map(|(_, a)| a.clone()).collect();
                    row["weight"] = ints(d.weight.coords());
                    row["contributions"] = ints(&a);
                    text += &format!("  w = {}  a = {a:?}", d.weight);
                }
                text.push('\n');
                total += &l;
                rows.push(row);
            }
            text += &format!("sum = {total}");
            let mut json = json!({ "edges": rows, "sum_lengths": value(&Num::from(&total)) });
            let mut pass = true;
            if oracle {
                let rep = cross_check(&p);
                pass = rep.pass;
                text += &format!("\n{rep}");
                json["oracle"] = value(&ReportJson::from(&rep));
            }
            Ok(Output { json, text, pass })
        }
        Input::Graph(g) => {
            let total = g.sum_lengths()?;
            let mut text = String::new();
            for (e, &(a, b)) in g.edges().iter().enumerate() {
                let (w, l) = g.edge_weight(e)?;
                text += &format!(
                    "{} -- {}  w = {w}  l = {l}\n",
                    g.vertices()[a].id,
                    g.vertices()[b].id
                );
            }
            text += &format!("sum = {total}");
            Ok(Output {
                json: json!({
                    "graph": value(&GraphJson::from_graph(&g)),
                    "sum_lengths": value(&Num(total)),
                }),
                text,
                pass: true,
            })
        }
    }
}

pub fn read_request(source: &str) -> Result<RootRequest> {
    io::parse_root_request(&input::read_text(Some(source))?)
}

pub fn request_from_args(root_type: Option<&str>, rank: Option<usize>, subset: &str) -> Result<RootRequest> {
    let (Some(t), Some(rank)) = (root_type, rank) else {
        return Err(Error::InvalidArgument(
            "give TYPE and RANK, or --request".into(),
        ));
    };
    let subset = subset
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::InvalidArgument(format!("bad simple-root index {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RootRequest {
        root_type: t.to_string(),
        rank,
        subset,
    })
}

pub fn gkm_build(req: &RootRequest) -> Result<Output> {
    let t: RootType = req.root_type.parse()?;
    let rs = RootSystem::build(t, req.rank)?;
    let g = rs.coadjoint_graph(&req.subset)?;
    let h = gkm::h_vector_graph(&g, None)?;
    let total = g.sum_lengths()?;
    let mut report = gkm::verify_graph_corollary(&g)?;
    let mut shape = gkm::validate(&g);
    shape.merge_items(gkm::is_reflexive_graph(&g)?);
    report.merge_items(shape);
    let text = format!(
        "{t}{} / I = {:?}: {} vertices, degree {}, h = {h}, sum l = {total}\n{report}",
        req.rank,
        req.subset,
        g.vertices().len(),
        g.degree()
    );
    let response = RootResponse {
        graph: GraphJson::from_graph(&g),
        h_vector: h.0.iter().map(Num::from).collect(),
        sum_lengths: Num(total),
        report: ReportJson::from(&report),
    };
    Ok(Output {
        json: value(&response),
        text,
        pass: report.pass,
    })
}

pub fn gkm_check(source: Option<&str>) -> Result<Output> {
    let g = input::load(source)?.skeleton();
    let mut rep = gkm::validate(&g);
    if rep.pass {
        match gkm::verify_graph_corollary(&g) {
            Ok(c) => rep.merge_items(c),
            Err(e @ (Error::NotGorenstein | Error::DirectionDependent)) => {
                rep.pass = false;
                rep.per_item.push(ItemResult::new("graph-corollary", false, e.to_string()));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(report_output(rep))
}

pub fn bounds_table(n_min: usize, n_max: usize) -> Result<Output> {
    if n_min < 2 || n_max < n_min {
        return Err(Error::InvalidArgument(format!("bad range {n_min}..={n_max}")));
    }
    let cells = table_c(n_min..=n_max, 1..=n_max + 1);
    let ns: Vec<usize> = (n_min..=n_max).collect();
    let width = cells
        .iter()
        .map(|c| c.expression().len())
        .max()
        .unwrap_or(0)
        .max(4);
    let mut text = format!("{:>3} ", "k0");
    for n in &ns {
        text += &format!("| {:<width$} ", format!("n={n}"));
    }
    text.push('\n');
    for k0 in 1..=n_max + 1 {
        text += &format!("{k0:>3} ");
        for &n in &ns {
            let e = cells
                .iter()
                .find(|c| c.n == n && c.k0 == k0)
                .map(|c| c.expression())
                .unwrap_or_default();
            text += &format!("| {e:<width$} ");
        }
        text.push('\n');
    }
    let json = Value::Array(cells.iter().map(|c| value(&TableCellJson::from(c))).collect());
    Ok(Output {
        json,
        text,
        pass: true,
    })
}

pub fn bounds_enumerate(n: usize, k0: usize, unimodal: bool, cap: Option<u64>) -> Result<Output> {
    let set = enumerate_admissible(n, k0, unimodal, cap)?;
    let mut text = format!(
        "n = {n}, k0 = {k0}, unimodal = {unimodal}, bound = {}, complete = {}\n",
        set.bound, set.complete
    );
    let shown: Vec<String> = set
        .vectors
        .iter()
        .map(|v| {
            let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    text += &shown.join(" ");
    Ok(Output {
        json: value(&AdmissibleJson::from(&set)),
        text,
        pass: true,
    })
}

pub fn catalog_list() -> Output {
    let entry = |name: &&str, kind: &str| {
        json!({ "name": name, "kind": kind, "note": catalog::describe(name) })
    };
    let mut entries: Vec<Value> = catalog::POLYTOPES.iter().map(|n| entry(n, "polytope")).collect();
    entries.extend(catalog::GRAPHS.iter().map(|n| entry(n, "gkm-graph")));
    let width = catalog::POLYTOPES
        .iter()
        .chain(catalog::GRAPHS)
        .map(|n| n.len())
        .max()
        .unwrap_or(0);
    let text = entries
        .iter()
        .map(|e| {
            format!(
                "{:<width$}  {:<9}  {}",
                e["name"].as_str().unwrap_or_default(),
                e["kind"].as_str().unwrap_or_default(),
                e["note"].as_str().unwrap_or_default()
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    Output {
        json: Value::Array(entries),
        text,
        pass: true,
    }
}

pub fn catalog_show(name: &str) -> Result<Output> {
    let inp = input::load(Some(&format!("catalog:{name}")))?;
    let kind = inp.kind();
    let (json, text) = match &inp {
        Input::Polytope(p) => (value(&PolytopeJson::from_polytope(p)), polytope_text(p)),
        Input::Graph(g) => {
            let j = GraphJson::from_graph(g);
            let mut t = format!("ambient_dim {}, degree {}\n", g.ambient_dim(), g.degree());
            for v in g.vertices() {
                t += &format!("  {}  {}\n", v.id, v.coords);
            }
            t += &format!("{} edges", g.edges().len());
            (value(&j), t)
        }
    };
    Ok(Output {
        text: format!("{name} ({kind})\n{text}"),
        json,
        pass: true,
    })
}
