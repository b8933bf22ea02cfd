//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use klein_core::exact::{GaussianRational, Matrix, MultiPoly, VariableContext};
use klein_core::report::{run_verification, Claim, Options, Section, VerificationReport};
use klein_core::sampling;
use rand::Rng;
use serde_json::{json, Value};

const SEED: u64 = 1;

struct Run {
    report: VerificationReport,
    failures: Vec<String>,
}

impl Run {
    fn new(sections: &[Section]) -> Run {
        Run { report: run_verification(sections, SEED, Options::default()), failures: Vec::new() }
    }

    fn claim(&self, id: &str) -> Option<&Claim> {
        self.report.claims.iter().find(|c| c.id == id)
    }

    /// The claim passed and its computed value is the literal given here.
    fn expect(&mut self, id: &str, value: Value) {
        match self.claim(id) {
            None => self.failures.push(format!("{id}: missing")),
            Some(c) if !c.passed => self.failures.push(format!("{id}: failed, computed {}", c.computed)),
            Some(c) if c.computed != value => {
                self.failures.push(format!("{id}: computed {}, want {value}", c.computed))
            }
            Some(_) => {}
        }
    }

    fn passed(&mut self, id: &str) {
        match self.claim(id) {
            Some(c) if c.passed => {}
            Some(c) => self.failures.push(format!("{id}: failed, computed {}", c.computed)),
            None => self.failures.push(format!("{id}: missing")),
        }
    }

    fn check(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }
}

fn incidence_statistics(r: &mut Run) {
    r.expect(
        "incidence.dual_plane_arrangement",
        json!({"t": {"4": 960, "6": 480, "15": 60}, "t1": {"2": 360, "3": 320, "6": 30}}),
    );
}

fn configuration_counts(r: &mut Run) {
    r.expect(
        "incidence.counts",
        json!({"points": 60, "lines": 30, "quadrics": 10, "points_per_line": 6, "lines_per_point": 3,
               "quadrics_per_line": 4, "lines_per_quadric": 12, "points_per_plane": 15}),
    );
}

fn group_facts(r: &mut Run) {
    r.expect("group.heisenberg_order", json!(32));
    r.expect("group.heisenberg_anticommute", json!([true, true]));
    r.expect("group.heisenberg_center_and_commutator", json!({"center": "{+1,-1}", "commutator": "{+1,-1}"}));
    r.expect("group.quadric_orbits", json!([[1, 2, 3, 4, 5], [6, 7, 8, 9, 10]]));
}

fn ideal(r: &mut Run) {
    r.expect("ideal.sextics_through_points", json!(24));
    r.expect("ideal.generators_form_a_basis", json!({"vanish": true, "rank": 24}));
    r.expect("ideal.quintics_through_w", json!(0));
    r.expect("ideal.sextics_through_w", json!({"dimension": 28, "contains_g1_to_g4": true}));
}

fn cone(r: &mut Run) {
    r.expect("cone.vanishes_at_points", json!(60));
    r.expect("cone.vertex_multiplicity_six", json!(56));
    r.expect("cone.unexpected", json!({"actual": 1, "expected": 0, "unexpected": true}));
    r.expect("cone.swap_symmetry", json!(true));
}

fn mult422(r: &mut Run) {
    r.expect("mult422.symbolic_rank", json!({"shape": [20, 24], "rank": 15}));
    r.expect("mult422.unique_sextic", json!([[23, 1], [23, 1], [23, 1]]));
}

fn geproci(r: &mut Run) {
    r.passed("geproci.covers_by_ten_skew_lines");
    let covers = r.claim("geproci.covers_by_ten_skew_lines").map(|c| c.computed.as_array().map_or(0, Vec::len));
    r.check("six ten-line covers", covers == Some(6));
    r.expect("geproci.projected_lines", json!(30));
    r.expect("geproci.c6_contains_images", json!(60));
    r.expect("geproci.complete_intersection", json!([[6, 10, 60, true], [6, 10, 60, true], [6, 10, 60, true]]));
    r.expect("geproci.star_configuration", json!([[45, true, true], [45, true, true], [45, true, true]]));
}

fn chains(r: &mut Run) {
    for k in 0..=6usize {
        let id = format!("chains.remove_{k}_lines");
        r.passed(&id);
        let c = r.claim(&id).map(|c| c.computed.clone()).unwrap_or_default();
        r.check(&format!("{id}: type (6,{})", 10 - k), c["type"] == json!([6, 10 - k]) && c["geproci"] == json!(true));
        r.check(&format!("{id}: no grid"), c["grid"].is_null());
    }
    r.check(
        "k=4 six-point lines",
        r.claim("chains.remove_4_lines")
            .is_some_and(|c| c.computed["six_point_lines"] == json!([12, 15, 20, 25, 26, 30])),
    );
    r.check(
        "k=5 five-point lines in families D and F",
        r.claim("chains.remove_5_lines")
            .is_some_and(|c| c.computed["five_point_lines"] == json!({"5": "DF", "8": "DF"})),
    );
    r.expect("chains.remove_7_lines", json!({"points": 18, "grid": [3, 6]}));
}

fn z24(r: &mut Run) {
    r.passed("z24.point_line_configuration");
    r.check(
        "24 points on 18 lines, labels as tabulated",
        r.claim("z24.point_line_configuration").is_some_and(|c| {
            c.computed["lines"].as_array().map_or(0, Vec::len) == 18
                && c.computed["labels_match"] == json!(true)
                && c.computed["max_points_on_a_line"] == json!(4)
        }),
    );
    r.expect("z24.unexpected_quartic_cone", json!([[1, 0, true], [1, 0, true], [1, 0, true]]));
    r.expect("z24.complete_intersection", json!([[4, 6, 1, true], [4, 6, 1, true], [4, 6, 1, true]]));
    r.expect("z24.residual_grid", json!([6, 6]));
}

fn real(r: &mut Run) {
    r.expect("real.collinear_tuples", json!({"triples": 16, "quadruples": 3}));
    r.expect("real.every_pair_has_a_third_point", json!({"pairs": 66, "covered": true}));
}

fn gq(rng: &mut impl Rng) -> GaussianRational {
    let re = GaussianRational::from_fraction(rng.random_range(-20..=20), rng.random_range(1..=9));
    let im = GaussianRational::from_fraction(rng.random_range(-20..=20), rng.random_range(1..=9));
    &re + &(&im * &GaussianRational::i())
}

fn properties(r: &mut Run) {
    let mut rng = sampling::rng(sampling::suite_seed(SEED, "acceptance-properties"));
    for _ in 0..200 {
        let (a, b, c) = (gq(&mut rng), gq(&mut rng), gq(&mut rng));
        let ok = &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a + &b == &b + &a
            && (a.is_zero() || &a * &a.inv().expect("nonzero") == GaussianRational::one());
        r.check(&format!("field axioms at {a}, {b}, {c}"), ok);
    }
    let ctx = VariableContext::ABCD;
    for _ in 0..20 {
        let monomials: Vec<MultiPoly> =
            ["a*b", "c^2", "d*a", "b^2"].iter().map(|m| MultiPoly::parse(ctx, m).expect("monomial")).collect();
        let entries: Vec<MultiPoly> = (0..12)
            .map(|_| {
                monomials.iter().fold(MultiPoly::zero(ctx), |acc, m| {
                    acc.add(&m.scale(&GaussianRational::from(rng.random_range(-2i64..=2))))
                })
            })
            .collect();
        let m = Matrix::from_rows(4, entries.chunks(4).map(<[MultiPoly]>::to_vec).collect()).expect("3x4");
        let p: Vec<GaussianRational> = (0..4).map(|_| gq(&mut rng)).collect();
        let symbolic = m.rank().expect("one context");
        let special = m.specialize(&p).expect("four values").rank();
        r.check(&format!("specialized rank {special} exceeds symbolic rank {symbolic}"), special <= symbolic);
    }
    r.expect("ideal.group_stable", json!(1920));

    let seeded = [Section::Mult422, Section::Geproci, Section::Z24];
    let first = run_verification(&seeded, SEED, Options::default()).to_jsonl();
    let second = run_verification(&seeded, SEED, Options::default()).to_jsonl();
    r.check("byte-identical re-runs", first == second);
}

type Criterion = (&'static str, &'static [Section], fn(&mut Run));

const CRITERIA: [Criterion; 11] = [
    ("incidence statistics of the dual planes", &[Section::Incidence], incidence_statistics),
    ("configuration counts", &[Section::Incidence], configuration_counts),
    ("Heisenberg group and quadric orbits", &[Section::Group], group_facts),
    ("ideal of the 60 points in degrees 5 and 6", &[Section::Ideal], ideal),
    ("unexpected cone of degree 6", &[Section::Cone], cone),
    ("sextic with multiplicities (4,2,2)", &[Section::Mult422], mult422),
    ("geproci of type (6,10)", &[Section::Geproci], geproci),
    ("removal chains and the 18-point grid", &[Section::Chains], chains),
    ("24-point subconfiguration", &[Section::Z24], z24),
    ("planar collinearities in w = 0", &[Section::Real], real),
    ("property suites", &[Section::Ideal], properties),
];

fn main() -> ExitCode {
    let total = Instant::now();
    let mut all = true;
    for (k, (name, sections, check)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let mut run = Run::new(sections);
        check(&mut run);
        let ok = run.failures.is_empty();
        all &= ok;
        println!(
            "criterion {:>2} {} {name} ({:.1} s)",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        for f in &run.failures {
            println!("    {f}");
        }
    }
    println!(
        "acceptance: {} in {:.1} s",
        if all { "all criteria pass" } else { "FAILED" },
        total.elapsed().as_secs_f64()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
