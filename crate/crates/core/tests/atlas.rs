use involcode::atlas::{builtin, parse_triangulation, torus_conjugation, triangulation_to_json, ATLAS};
use involcode::equivariant::{extract_code, regularize};

#[test]
fn format_round_trips() {
    for entry in &ATLAS {
        let (m, tau) = entry.build();
        let text = triangulation_to_json(&m, &tau);
        let (m2, tau2) = parse_triangulation(&text).unwrap();
        assert_eq!(m2.facets(), m.facets());
        assert_eq!(tau2, tau);
        assert_eq!(triangulation_to_json(&m2, &tau2), text);
    }
}

#[test]
fn expected_results_hold() {
    for entry in &ATLAS {
        let (m, tau) = entry.build();
        let em = regularize(m, tau).unwrap();
        let code = extract_code(&em).unwrap();
        assert_eq!(em.k(), entry.expected.k, "{}", entry.name);
        assert_eq!(code.is_doubly_even(), entry.expected.doubly_even, "{}", entry.name);
    }
}

#[test]
fn torus_code_does_not_depend_on_resolution() {
    let codes: Vec<_> = [4, 6]
        .into_iter()
        .map(|m| {
            let (c, tau) = torus_conjugation(m).unwrap();
            extract_code(&regularize(c, tau).unwrap()).unwrap()
        })
        .collect();
    assert_eq!(codes[0], codes[1]);
}

#[test]
fn builtin_names() {
    assert!(builtin("torus_conjugation:6").is_ok());
    assert!(builtin("torus_conjugation:5").is_err());
    assert!(builtin("lens_space").is_err());
}
