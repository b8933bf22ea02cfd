use klein_core::report::{figure_spec, render_figure, run_verification, Options, Section};
use serde_json::Value;

#[test]
fn real_section_is_seed_independent() {
    let a = run_verification(&[Section::Real], 1, Options::default());
    let b = run_verification(&[Section::Real], 99, Options::default());
    assert!(a.passed());
    assert_eq!(a.claims, b.claims);
    assert!(a.claims.iter().all(|c| c.id.starts_with("real.")));
}

#[test]
fn jsonl_has_header_claims_and_footer() {
    let r = run_verification(&[Section::Real, Section::Incidence], 5, Options::default());
    let lines: Vec<Value> = r.to_jsonl().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), r.claims.len() + 2);
    assert_eq!(lines[0]["kind"], "header");
    assert_eq!(lines[0]["sections"], serde_json::json!(["incidence", "real"]));
    let footer = lines.last().unwrap();
    assert_eq!(footer["verdict"], "pass");
    assert_eq!(footer["not_certified"].as_array().unwrap().len(), 2);
    assert!(lines[1..lines.len() - 1].iter().all(|c| c["verdict"] == "pass" && c.get("wall_ms").is_none()));
}

#[test]
fn timings_are_opt_in() {
    let r = run_verification(&[Section::Real], 1, Options { timings: true });
    assert!(r.claims.iter().all(|c| c.wall_ms.is_some()));
}

#[test]
fn sections_parse_by_name() {
    assert_eq!("z24".parse::<Section>().unwrap(), Section::Z24);
    assert!("Z24".parse::<Section>().is_err());
    assert_eq!(Section::ALL.len(), 9);
}

#[test]
fn figure_is_well_formed_svg() {
    let svg = render_figure();
    let doc = roxmltree::Document::parse(&svg).unwrap();
    let class = |c: &str| doc.descendants().filter(|n| n.attribute("class") == Some(c)).count();
    assert_eq!(class("point"), 15);
    assert_eq!(class("side"), 3);
    let labels: Vec<&str> = doc.descendants().filter(|n| n.has_tag_name("text")).filter_map(|n| n.text()).collect();
    for v in ["25", "26", "27"] {
        assert!(labels.contains(&v));
    }
    let spec = figure_spec();
    let corner = |key: &dyn Fn(&(usize, f64, f64)) -> f64| {
        spec.points.iter().max_by(|p, q| key(p).total_cmp(&key(q))).unwrap().0
    };
    assert_eq!(corner(&|p| -p.1), 25);
    assert_eq!(corner(&|p| p.1), 26);
    assert_eq!(corner(&|p| -p.2), 27);
}
