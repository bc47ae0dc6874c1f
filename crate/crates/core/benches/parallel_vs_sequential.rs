use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use modrep::chartab::character_table_with;
use modrep::group::library::{alternating, special_linear_2, symmetric};
use modrep::group::StructureConstants;
use modrep::Exec;

fn policies() -> [(&'static str, Exec); 2] {
    [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)]
}

fn character_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("character_table");
    group.sample_size(10);
    for (name, g) in [("S5", symmetric(5)), ("SL(2,7)", special_linear_2(7)), ("A6", alternating(6))] {
        g.classes();
        for (label, exec) in policies() {
            group.bench_with_input(BenchmarkId::new(label, name), &g, |b, g| {
                b.iter(|| character_table_with(g, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn structure_constants(c: &mut Criterion) {
    let mut group = c.benchmark_group("structure_constants");
    group.sample_size(10);
    let g = special_linear_2(7);
    g.classes();
    for (label, exec) in policies() {
        group.bench_function(label, |b| b.iter(|| StructureConstants::compute(&g, exec)));
    }
    group.finish();
}

criterion_group!(benches, character_tables, structure_constants);
criterion_main!(benches);
