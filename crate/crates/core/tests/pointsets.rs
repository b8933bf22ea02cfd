use klein_core::error::Error;
use klein_core::geproci::{self, find_geproci};
use klein_core::klein::{self, data};
use klein_core::report::{dump_configuration, dump_points, load_pointset, parse_pointset};
use klein_core::sampling;

#[test]
fn dump_round_trips() {
    let text = dump_configuration();
    let points = parse_pointset(&text, "dump").unwrap();
    assert_eq!(points, klein::klein_points());
}

#[test]
fn load_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z60.txt");
    std::fs::write(&path, dump_configuration()).unwrap();
    assert_eq!(load_pointset(&path).unwrap().len(), 60);
    assert!(matches!(load_pointset(&dir.path().join("missing.txt")), Err(Error::Io(_))));
}

#[test]
fn repeated_point_names_both_lines() {
    let p1 = klein::klein_points()[0].to_string();
    let text = format!("# twice\n{p1}\n[1:0:0:0]\n{p1}\n");
    match parse_pointset(&text, "twice") {
        Err(Error::PointFile { line, reason, .. }) => {
            assert_eq!(line, 4);
            assert!(reason.contains("line 2"), "{reason}");
        }
        other => panic!("expected a duplicate error, got {other:?}"),
    }
}

#[test]
fn scaled_coordinates_are_the_same_point() {
    assert!(parse_pointset("[1:2:3:4]\n[2:4:6:8]\n", "t").is_err());
    assert_eq!(parse_pointset("[2i:0:0:0]\n", "t").unwrap()[0].to_string(), "[1:0:0:0]");
}

#[test]
fn residual_file_is_a_six_by_six_grid() {
    let config = klein::build_klein().unwrap();
    let z24 = data::indices(&data::Z24);
    let residual: Vec<_> = (0..60).filter(|i| !z24.contains(i)).map(|i| config.points[i].clone()).collect();
    let parsed = parse_pointset(&dump_points(&residual, "residual"), "residual").unwrap();
    let grid = geproci::grid_check(&parsed).unwrap();
    assert_eq!((grid.a, grid.b), (6, 6));
}

#[test]
fn z24_file_is_found_geproci_of_type_4_6() {
    let config = klein::build_klein().unwrap();
    let pts: Vec<_> = data::indices(&data::Z24).iter().map(|&i| config.points[i].clone()).collect();
    let seeds: Vec<u64> = (0..2).map(|k| sampling::stream_seed(7, k)).collect();
    let found = find_geproci(&pts, &[(4, 6)], &seeds).unwrap().unwrap();
    assert_eq!(found.cover.len(), 6);
    assert!(found.certificates.iter().all(|c| c.passed() && c.ci_type() == (4, 6)));
    assert!(find_geproci(&pts, &[(4, 5)], &seeds).is_err());
}

#[test]
fn general_points_are_not_geproci_by_lines() {
    let pts = sampling::general_points(&mut sampling::rng(3), 8, &Default::default()).unwrap();
    assert!(find_geproci(&pts, &geproci::candidate_types(8), &[1]).unwrap().is_none());
    assert!(geproci::grid_check(&pts).is_none());
}
