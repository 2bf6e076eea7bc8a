//! Left-hand sides against values frozen from an independent 30-digit evaluation.
#![allow(clippy::excessive_precision)]

use logkernel::catalog::{lhs_value, Params};
use logkernel::quad::QuadConfig;
use std::f64::consts::PI;

fn cfg() -> QuadConfig {
    QuadConfig {
        abs_tol: 1e-15,
        rel_tol: 1e-14,
        ..QuadConfig::default()
    }
}

fn a(v: f64) -> Params {
    [("a".to_string(), v)].into_iter().collect()
}

fn check(id: &str, p: &Params, want: f64, tol: f64) {
    let got = lhs_value(id, p, &cfg()).unwrap();
    assert!(
        (got.value - want).abs() <= tol,
        "{id} {p:?}: {} vs {want} (diff {:e})",
        got.value,
        (got.value - want).abs()
    );
}

#[test]
fn main_list() {
    check("main-06", &a(PI), 0.0599907140740581321223, 1e-14);
    check("main-09", &a(2.0 * PI), 0.0166386260051202569683, 1e-14);
    check("main-11", &a(PI), 0.00540885177915127337080, 1e-14);
    check("main-18", &a(PI), -0.0467757405746446983370, 1e-14);
    let i10 = [
        (0.5, 2.671553006556509),
        (1.0, 0.2859482180349464),
        (2.0, 0.02717387856593143),
        (2.0 * PI, 0.000402272583151139),
        (5.0, 0.000960958851242482),
    ];
    for (x, v) in i10 {
        check("main-10", &a(x), v, 1e-13 * v.abs().max(1.0));
    }
}

#[test]
fn appendix_parametric() {
    let grid = [0.5, 1.0, PI, 5.0];
    let e2 = [-2.10279115159230220, -0.822896287056297600, -0.135181422730739085, -0.0590032771380534323];
    let e9 = [1.13573742940647016, 0.439660353885963101, 0.0683098861837906715, 0.0291386205422620539];
    let e14 = [-0.822896287056297600, -0.287343873764463649, -0.0386078324507664303, -0.0158903902609145845];
    for (i, &x) in grid.iter().enumerate() {
        check("appendix-02", &a(x), e2[i], 1e-13);
        check("appendix-09", &a(x), e9[i], 1e-13);
        check("appendix-14", &a(x), e14[i], 1e-13);
    }
}

#[test]
fn appendix_fixed() {
    check("appendix-01", &a(2.0 * PI), -0.0386078324507664303, 1e-14);
    check("appendix-13", &a(PI), -0.0386078324507664303, 1e-14);
    check("appendix-07", &a(PI / 2.0), 0.0551589000381628983, 1e-14);
    check("appendix-08", &a(PI / 4.0), 0.0387936588343428445, 1e-14);
    check("appendix-10", &a(PI), -0.0965735902799726547, 1e-14);
    check("appendix-11", &a(PI / 2.0), -0.0713495408493620774, 1e-14);
    check("appendix-12", &a(PI / 4.0), -0.0458716234174888797, 1e-14);
}

#[test]
fn appendix_regularized() {
    let q = a(10.0 * PI);
    check("appendix-03", &q, -0.00167346609082310539, 1e-13);
    check("appendix-15", &a(5.0 * PI), -0.00167346609082310539, 1e-13);
    check("appendix-05", &q, -1.70260578050984100e-6, 1e-13);
    check("appendix-04", &q, -1.67554301488682766e-6, 1e-15);
    check("appendix-17", &q, -4.23022059150142270e-7, 1e-14);
    check("appendix-16", &q, -4.21333203758873061e-7, 1e-15);
}
