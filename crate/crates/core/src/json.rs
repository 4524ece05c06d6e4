//! JSON views of every public output. Key order is the serializer's sorted
//! map order and collection order is fixed by construction, so identical
//! inputs serialize byte-identically.

use crate::alex::{AlexOutcome, AlexPoly};
use crate::braid::BraidWord;
use crate::burau::LMatrix;
use crate::closure::{AlgebraPresentation, ClosurePresentation, LinkDgCategory};
use crate::count::CountReport;
use crate::dg::DgPresentation;
use crate::element::Element;
use crate::group::GroupPresentation;
use crate::invariants::{InvarianceReport, InvariantValue};
use crate::peripheral::PeripheralPresentation;
use crate::verify::CheckReport;
use serde_json::{json, Map, Value};

pub fn braid_json(b: &BraidWord) -> Value {
    json!({
        "strands": b.strand_count(),
        "letters": b.letters(),
    })
}

pub fn element_json(e: &Element) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(p, c)| {
            json!({
                "coeff": c.to_string(),
                "path": p.0.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    Value::Array(terms)
}

pub fn presentation_json(p: &DgPresentation) -> Value {
    let objects: Vec<Value> = p
        .quiver
        .sorted_objects()
        .iter()
        .map(|o| Value::String(o.to_string()))
        .collect();
    let arrows: Vec<Value> = p
        .quiver
        .arrows()
        .map(|a| {
            json!({
                "name": a.name.to_string(),
                "src": a.src.to_string(),
                "tgt": a.tgt.to_string(),
                "deg": a.deg,
            })
        })
        .collect();
    let rules: Vec<Value> = p
        .rules
        .rules()
        .iter()
        .map(|r| {
            json!({
                "lhs": r.lhs.0.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "rhs": element_json(&r.rhs),
            })
        })
        .collect();
    let mut differential = Map::new();
    for (g, d) in &p.diff {
        if !d.is_zero() {
            differential.insert(g.to_string(), element_json(d));
        }
    }
    json!({
        "objects": objects,
        "arrows": arrows,
        "rules": rules,
        "differential": Value::Object(differential),
    })
}

pub fn link_dg_json(l: &LinkDgCategory) -> Value {
    json!({
        "presentation": presentation_json(&l.pres),
        "base_object": l.base_object.to_string(),
        "component_objects": l.component_objects.iter().map(|o| o.to_string()).collect::<Vec<_>>(),
        "params": l.params.iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
        "marked_strands": l.marked_strands,
        "strand_component": l.strand_component,
        "component_writhes": l.component_writhes,
    })
}

pub fn algebra_json(a: &AlgebraPresentation) -> Value {
    json!({
        "generators": a.pres.quiver.arrow_names().map(|s| s.to_string()).collect::<Vec<_>>(),
        "params": a.params,
        "relations": a.relations.iter().map(element_json).collect::<Vec<_>>(),
    })
}

pub fn group_json(g: &GroupPresentation) -> Value {
    json!({
        "generators": (1..=g.num_generators).map(|i| format!("x{i}")).collect::<Vec<_>>(),
        "relators": g.relators.iter().map(|w| Value::Array(
            w.0.iter().map(|&k| Value::from(k)).collect()
        )).collect::<Vec<_>>(),
    })
}

pub fn matrix_json(m: &LMatrix) -> Value {
    let rows: Vec<Value> = (0..m.rows)
        .map(|i| {
            Value::Array(
                (0..m.cols)
                    .map(|j| Value::String(m.at(i, j).to_string()))
                    .collect(),
            )
        })
        .collect();
    json!({"rows": m.rows, "cols": m.cols, "entries": rows})
}

pub fn closure_json(c: &ClosurePresentation) -> Value {
    match c {
        ClosurePresentation::Group(g) => json!({"kind": "group", "presentation": group_json(g)}),
        ClosurePresentation::Category {
            presentation,
            relations,
        } => {
            let rels: Vec<Value> = relations
                .iter()
                .map(|(g, e)| json!({"generator": g.to_string(), "relation": element_json(e)}))
                .collect();
            json!({
                "kind": "category",
                "presentation": presentation_json(presentation),
                "relations": rels,
            })
        }
    }
}

pub fn alex_json(a: &AlexOutcome) -> Value {
    match a {
        AlexOutcome::Knot(p) => json!({
            "kind": "knot",
            "polynomial": p.to_string(),
            "coefficients": coeffs_json(p),
            "symmetric": p.is_symmetric(),
        }),
        AlexOutcome::Link(gens) => json!({
            "kind": "link",
            "ideal_generators": gens.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        }),
    }
}

fn coeffs_json(p: &AlexPoly) -> Value {
    Value::Array(p.0.iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn count_json(c: &CountReport) -> Value {
    json!({
        "invariant": c.invariant,
        "target": c.target,
        "count": c.count,
    })
}

pub fn check_report_json(r: &CheckReport) -> Value {
    let items: Vec<Value> = r
        .items
        .iter()
        .map(|i| {
            json!({
                "check": i.check,
                "generator": i.generator,
                "lhs": i.lhs,
                "rhs": i.rhs,
                "pass": i.pass,
            })
        })
        .collect();
    json!({"pass": r.pass(), "items": items})
}

pub fn peripheral_json(p: &PeripheralPresentation) -> Value {
    json!({
        "group": group_json(&p.group),
        "meridian": p.meridian.0,
        "longitude": p.longitude.0,
        "writhe": p.writhe,
        "object0_ideal": p.object0_ideal,
        "cord_relations": [
            "[e] = 1 - mu",
            "[g1 g2] - [g1 m g2] - [g1][g2] = 0",
            "[g l] = [l g] = lambda [g]",
        ],
    })
}

pub fn invariance_json(r: &InvarianceReport) -> Value {
    let rows: Vec<Value> = r
        .rows
        .iter()
        .map(|row| {
            json!({
                "representative": row.representative,
                "braid": row.braid,
                "value": invariant_value_json(&row.value),
            })
        })
        .collect();
    json!({
        "invariant": r.invariant,
        "all_equal": r.all_equal,
        "rows": rows,
    })
}

fn invariant_value_json(v: &InvariantValue) -> Value {
    match v {
        InvariantValue::Alexander(p) => json!({"alexander": p.to_string()}),
        InvariantValue::Count(c) => json!({"count": c}),
        InvariantValue::Grid(g) => Value::Array(
            g.iter()
                .map(|((lam, mu), c)| json!([lam, mu, c]))
                .collect(),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::knot_dg_category;

    #[test]
    fn serialization_is_deterministic() {
        let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let l1 = knot_dg_category(&b).unwrap();
        let l2 = knot_dg_category(&b).unwrap();
        assert_eq!(
            serde_json::to_string(&link_dg_json(&l1)).unwrap(),
            serde_json::to_string(&link_dg_json(&l2)).unwrap()
        );
    }

    #[test]
    fn element_schema_shape() {
        let b = BraidWord::identity(1);
        let link = knot_dg_category(&b).unwrap();
        let db = link.pres.d_arrow(&"b1".into()).unwrap();
        let v = element_json(&db);
        let arr = v.as_array().unwrap();
        assert!(arr.iter().all(|t| t.get("coeff").is_some() && t.get("path").is_some()));
    }
}
