//! Acceptance gate: one test per shipped criterion, each driving the named
//! verification checks with the bounds the criterion demands.

use std::time::{Duration, Instant};

use orbit_atlas::checks::{run_check, Config};

fn pass(name: &str, cfg: &Config) {
    if let Err(msg) = run_check(name, cfg) {
        panic!("{}: {}", name, msg);
    }
}

#[test]
fn criterion_1_triangle_reproduction() {
    let cfg = Config { max_n: 6, order: 12 };
    let clock = Instant::now();
    pass("triangle-closed-form", &cfg);
    assert!(clock.elapsed() < Duration::from_secs(1), "closed form too slow");
    let clock = Instant::now();
    pass("triangle-enumeration", &cfg);
    assert!(clock.elapsed() < Duration::from_secs(120), "enumeration too slow");
    println!("PASS criterion 1: triangle rows 1..6 exact, within time bounds");
}

#[test]
fn criterion_2_total_sequence_three_routes() {
    let cfg = Config { max_n: 6, order: 12 };
    pass("totals-row-sums", &cfg);
    pass("totals-generating-series", &cfg);
    pass("totals-partial-permutations", &cfg);
    println!("PASS criterion 2: 1,5,28,185,1426,12607 by all three routes");
}

#[test]
fn criterion_3_per_index_series() {
    pass("series-per-index-counts", &Config::default());
    println!("PASS criterion 3: series coefficients match closed form for n <= 7");
}

#[test]
fn criterion_4_count_recursion() {
    pass("count-recursion", &Config::default());
    println!("PASS criterion 4: one-step recursion exact for n <= 7");
}

#[test]
fn criterion_5_parametrization_bijections() {
    let trips = Config { max_n: 5, order: 12 };
    pass("roundtrip-decorated-flag", &trips);
    pass("roundtrip-share-pairs", &trips);
    pass("roundtrip-flag-lists", &trips);
    pass("roundtrip-flag-list-pairs", &trips);
    pass("roundtrip-partial-permutations", &trips);
    pass("cardinalities-match-closed-form", &Config { max_n: 6, order: 12 });
    println!("PASS criterion 5: all round trips exhaustive for n <= 5, counts for n <= 6");
}

#[test]
fn criterion_6_nine_distinguished_lists() {
    pass("nine-distinguished-lists", &Config::default());
    println!("PASS criterion 6: the nine distinguished list partitions of degree 3");
}

#[test]
fn criterion_7_graph_golden() {
    pass("graph-golden-nine-nodes", &Config::default());
    pass("graph-two-nodes", &Config::default());
    println!("PASS criterion 7: nine-node graph with labels, types, and green covers");
}

#[test]
fn criterion_8_property_suite() {
    let cfg = Config { max_n: 5, order: 12 };
    let clock = Instant::now();
    pass("action-preserves-pairs", &cfg);
    pass("action-idempotent", &cfg);
    pass("action-monotone", &cfg);
    pass("graph-levels-consistent", &cfg);
    pass("weak-order-refines-closure", &cfg);
    pass("bruhat-matches-subword-oracle", &cfg);
    assert!(
        clock.elapsed() < Duration::from_secs(300),
        "property suite too slow: {:?}",
        clock.elapsed()
    );
    println!("PASS criterion 8: exhaustive property suite for n <= 5 within time bound");
}
