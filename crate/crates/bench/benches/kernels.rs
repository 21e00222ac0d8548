use criterion::{criterion_group, criterion_main, Criterion};
use shilov_core::ncalg::presets;
use shilov_core::oprep::{materialize, op_norm, rep_image, Family, RepSpec};
use shilov_core::qgroups::{verify_coaction_hom, Coaction};
use shilov_core::NcExpr;

fn normal_form(c: &mut Criterion) {
    let p = presets::pol_matsym();
    let x = p.parse_word("z22* z11* z21* z22 z21 z11").unwrap();
    c.bench_function("normal_form deg 6", |b| {
        b.iter(|| p.normal_form(&x).unwrap())
    });
}

fn materialize_fock(c: &mut Criterion) {
    let p = presets::pol_matsym();
    let spec = RepSpec::symbolic(Family::Fock);
    let e = rep_image(&p.parse_word("z11* z21 z22").unwrap(), &spec).unwrap();
    c.bench_function("materialize fock [16,32,16]", |b| {
        b.iter(|| materialize(&e, &[16, 32, 16], 0.5, &[]).unwrap())
    });
}

fn norm(c: &mut Criterion) {
    let p = presets::pol_matsym();
    let spec = RepSpec::symbolic(Family::Fock);
    let m = materialize(
        &rep_image(&p.parse_word("z11* z22").unwrap(), &spec).unwrap(),
        &[16, 32, 16],
        0.5,
        &[],
    )
    .unwrap();
    c.bench_function("op_norm fock [16,32,16]", |b| b.iter(|| op_norm(&m)));
    let tau = RepSpec::symbolic(Family::Tau);
    let t = materialize(
        &rep_image(&NcExpr::letter(presets::Z21), &tau).unwrap(),
        &[32, 32],
        0.5,
        &[0.7],
    )
    .unwrap();
    c.bench_function("op_norm tau [32,32]", |b| b.iter(|| op_norm(&t)));
}

fn coaction(c: &mut Criterion) {
    let co = Coaction::new().unwrap();
    c.bench_function("coaction hom pairs", |b| {
        b.iter(|| verify_coaction_hom(&co, 2).unwrap())
    });
}

criterion_group!(benches, normal_form, materialize_fock, norm, coaction);
criterion_main!(benches);
