// Command-line front end: curve database checks, local data, Hecke
// eigenvalues, identity sweeps, cohomology and representation verification,
// and Frobenius-matrix inspection.
//
// Exit codes: 0 pass, 1 fail/unverified, 2 input error.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "modpoints/modpoints.hpp"

using namespace modpoints;

namespace {

void print_certificates(const checker::Verdict& v) {
    std::printf("gate (E=%s, A=%s, p=%lld, n=%d)\n", v.E_label.c_str(), v.A_label.c_str(),
                static_cast<long long>(v.p), v.n);
    for (const checker::Certificate& c : v.certificates)
        std::printf("COND %d %s %s\n", c.condition, checker::status_name(c.status),
                    c.evidence.c_str());
    std::printf("VERDICT %s", checker::status_name(v.overall));
    if (v.overall == checker::Status::Pass) std::printf(" %s", v.conclusion.c_str());
    if (v.assumed_surjective) std::printf(" [surjectivity assumed]");
    std::printf("\n");
}

int run_check(const std::string& dbpath, const std::string& El, const std::string& Al, i64 p,
              int n, bool assume, bool strict) {
    std::vector<checker::CurveRecord> db = checker::load_db(dbpath);
    checker::Options opt;
    opt.assume_surjective = assume;
    opt.strict_cond6 = strict;
    checker::Verdict v = checker::check_semibig(checker::find_by_label(db, El),
                                                checker::find_by_label(db, Al), p, n, opt);
    print_certificates(v);
    return v.overall == checker::Status::Pass ? 0 : 1;
}

int run_search(const std::string& dbpath, i64 pmax, bool prime_only, const std::string& El,
               const std::string& Al, bool assume, unsigned workers) {
    std::vector<checker::CurveRecord> db = checker::load_db(dbpath);
    checker::SearchFilter f;
    f.prime_conductor_only = prime_only;
    if (!El.empty()) f.E_label = El;
    if (!Al.empty()) f.A_label = Al;
    checker::Options opt;
    opt.assume_surjective = assume;
    checker::SearchResult res = checker::search(db, f, pmax, opt, workers);
    for (const checker::SearchHit& h : res.passing)
        std::printf("PASS E=%s A=%s p=%lld  %s\n", db[h.E_index].label.c_str(),
                    db[h.A_index].label.c_str(), static_cast<long long>(h.p),
                    h.verdict.conclusion.c_str());
    for (const checker::SearchHit& h : res.unverified)
        std::printf("UNVERIFIED E=%s A=%s p=%lld\n", db[h.E_index].label.c_str(),
                    db[h.A_index].label.c_str(), static_cast<long long>(h.p));
    std::printf("%zu passing, %zu unverified\n", res.passing.size(), res.unverified.size());
    return 0;
}

int run_local_data(const std::string& dbpath, const std::string& label, i64 p) {
    std::vector<checker::CurveRecord> db = checker::load_db(dbpath);
    curves::LocalData d = curves::local_data(checker::find_by_label(db, label).model, p);
    std::printf("curve %s at %lld: kodaira %s, f=%lld, c=%lld, kind=%s, ord(disc)=%lld%s\n",
                label.c_str(), static_cast<long long>(p), d.kodaira.str().c_str(),
                static_cast<long long>(d.f), static_cast<long long>(d.c), curves::kind_name(d.kind),
                static_cast<long long>(d.ord_disc), d.anomalous ? ", anomalous" : "");
    return 0;
}

int run_aell(const std::string& dbpath, const std::string& label, i64 ell) {
    std::vector<checker::CurveRecord> db = checker::load_db(dbpath);
    i64 a = hecke::a_ell(checker::find_by_label(db, label).model, ell);
    std::printf("a_%lld(%s) = %lld\n", static_cast<long long>(ell), label.c_str(),
                static_cast<long long>(a));
    return 0;
}

int run_identities(i64 lmax, long long nmax) {
    long long sequences = 0;
    for (i64 ell : primes_up_to(lmax - 1)) {
        i64 bound = 0;
        while ((bound + 1) * (bound + 1) <= 4 * ell) ++bound;
        for (i64 a = -bound; a <= bound; ++a) {
            hecke::IdentityReport rep = hecke::verify_trace_identities(a, ell, nmax);
            ++sequences;
            if (!rep.ok) {
                std::printf("COUNTEREXAMPLE %s\n", rep.counterexample.c_str());
                return 1;
            }
        }
    }
    std::printf("verified %lld trace sequences up to n=%lld with no counterexample\n", sequences,
                nmax);
    return 0;
}

int run_cohom(i64 p, int n, const std::string& which) {
    cohom::H1Which w;
    if (which == "CartanOnSumZero")
        w = cohom::H1Which::CartanOnSumZero;
    else if (which == "BorelOnSumZero")
        w = cohom::H1Which::BorelOnSumZero;
    else if (which == "BorelOnFull")
        w = cohom::H1Which::BorelOnFull;
    else
        fail(errc::malformed_record, "unknown --which " + which);
    cohom::Verdict v = cohom::verify_h1(p, n, w);
    std::printf("claim:    %s\ncomputed: %s\nmethod:   %s\n%s\n", v.claim.c_str(),
                v.computed.c_str(), v.method.c_str(), v.pass ? "PASS" : "FAIL");
    return v.pass ? 0 : 1;
}

int run_rep(i64 p, int n) {
    bool all = true;
    std::vector<reptheory::SocleClass> classes = reptheory::socle_classes(p, n);
    std::printf("socle classes:");
    for (const reptheory::SocleClass& c : classes) {
        std::printf(" %s(dim=%zu,bfix=%zu,mult=%zu)", c.tag.c_str(), c.dim, c.bfixed_dim,
                    c.multiplicity);
        if (c.tag != "trivial" && c.tag != "steinberg") all = false;
    }
    std::printf("\n");
    reptheory::Verdict not0 = reptheory::verify_not0(p, n);
    std::printf("not0:     %s (%s)\n", not0.pass ? "PASS" : "FAIL", not0.detail.c_str());
    reptheory::Verdict rig = reptheory::verify_rigidity(p, n);
    std::printf("rigidity: %s (%s)\n", rig.pass ? "PASS" : "FAIL", rig.detail.c_str());
    all = all && not0.pass && rig.pass;
    return all ? 0 : 1;
}

int run_frobmat(i64 a, i64 q, i64 p, int n) {
    frobmat::FrobeniusData f = frobmat::disc_decomposition(a, q);
    std::printf("u=%lld b=%lld delta=%d  (u b^2 = %lld)\n", static_cast<long long>(f.u),
                static_cast<long long>(f.b), f.delta, static_cast<long long>(a * a - 4 * q));
    std::printf("note: u is the fundamental discriminant; the order generated by Frobenius may "
                "be smaller\n");
    frobmat::IntMatrix2 M = frobmat::frobenius_matrix(a, q);
    std::printf("M = %s  (trace %lld, det %lld)\n", M.str().c_str(),
                static_cast<long long>(M.trace()), static_cast<long long>(M.det()));
    auto pt = frobmat::borel_fixed_point(M, p, n);
    if (pt)
        std::printf("fixed point mod %lld^%d: %s\n", static_cast<long long>(p), n + 1,
                    pt->str().c_str());
    else
        std::printf("fixed point mod %lld^%d: none\n", static_cast<long long>(p), n + 1);
    return 0;
}

int run_valuation(const std::string& dbpath, const std::string& El, const std::string& Al, i64 p,
                  i64 N) {
    std::vector<checker::CurveRecord> db = checker::load_db(dbpath);
    checker::ValuationCertificate cert = checker::log_valuation_certificate(
        checker::find_by_label(db, El), checker::find_by_label(db, Al), p, N);
    std::printf("ord_p(q_A) = -ord_p(j(A)) = %lld; Tamagawa c_p(A) = %lld\n",
                static_cast<long long>(cert.c), static_cast<long long>(cert.tamagawa_cA));
    for (const checker::SeriesTerm& t : cert.terms)
        if (t.ord < (1ll << 60))
            std::printf("  term n=%lld: ord %lld\n", static_cast<long long>(t.n),
                        static_cast<long long>(t.ord));
    std::printf("certified valuation %lld (tail bound %s); %s\n",
                static_cast<long long>(cert.valuation), cert.tail_certified ? "closed" : "open",
                cert.note.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modpoints: local data, Hecke eigenvalues, lattice cohomology and the "
                 "six-hypothesis gate for modular points on elliptic curves"};
    app.require_subcommand(1);

    std::string dbpath, El, Al, label, which;
    i64 p = 3, ell = 2, pmax = 13, a = 0, q = 2, N = 64, lmax = 200;
    int n = 1;
    long long nmax = 10;
    unsigned workers = 1;
    bool assume = false, strict = false, prime_only = false;

    CLI::App* c_check = app.add_subcommand("check", "run the six-hypothesis gate on a pair");
    c_check->add_option("--db", dbpath)->required();
    c_check->add_option("--E", El)->required();
    c_check->add_option("--A", Al)->required();
    c_check->add_option("--p", p)->required();
    c_check->add_option("--n", n);
    c_check->add_flag("--assume-surjective", assume);
    c_check->add_flag("--strict-cond6", strict);

    CLI::App* c_search = app.add_subcommand("search", "scan the database for passing triples");
    c_search->add_option("--db", dbpath)->required();
    c_search->add_option("--pmax", pmax)->required();
    c_search->add_flag("--prime-conductor-only", prime_only);
    c_search->add_option("--E", El);
    c_search->add_option("--A", Al);
    c_search->add_flag("--assume-surjective", assume);
    c_search->add_option("--workers", workers);

    CLI::App* c_local = app.add_subcommand("local-data", "Tate's algorithm at one prime");
    c_local->add_option("--db", dbpath)->required();
    c_local->add_option("--curve", label)->required();
    c_local->add_option("--prime", p)->required();

    CLI::App* c_aell = app.add_subcommand("aell", "Hecke eigenvalue a_ell");
    c_aell->add_option("--db", dbpath)->required();
    c_aell->add_option("--curve", label)->required();
    c_aell->add_option("--ell", ell)->required();

    CLI::App* c_ident = app.add_subcommand("verify-identities", "exact trace-power identity sweep");
    c_ident->add_option("--lmax", lmax);
    c_ident->add_option("--nmax", nmax);

    CLI::App* c_cohom = app.add_subcommand("verify-cohom", "cohomology claims for one (p, n)");
    c_cohom->add_option("--p", p)->required();
    c_cohom->add_option("--n", n)->required();
    c_cohom->add_option("--which", which)->required();

    CLI::App* c_rep = app.add_subcommand("verify-rep", "socle, not0 and rigidity at one (p, n)");
    c_rep->add_option("--p", p)->required();
    c_rep->add_option("--n", n)->required();

    CLI::App* c_frob = app.add_subcommand("frobmat", "Frobenius matrix and Borel membership");
    c_frob->add_option("--a", a)->required();
    c_frob->add_option("--q", q)->required();
    c_frob->add_option("--p", p)->required();
    c_frob->add_option("--n", n)->required();

    CLI::App* c_val = app.add_subcommand("valuation", "modular-point logarithm valuation");
    c_val->add_option("--db", dbpath)->required();
    c_val->add_option("--E", El)->required();
    c_val->add_option("--A", Al)->required();
    c_val->add_option("--p", p)->required();
    c_val->add_option("--N", N);

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(c_check)) return run_check(dbpath, El, Al, p, n, assume, strict);
        if (app.got_subcommand(c_search))
            return run_search(dbpath, pmax, prime_only, El, Al, assume, workers);
        if (app.got_subcommand(c_local)) return run_local_data(dbpath, label, p);
        if (app.got_subcommand(c_aell)) return run_aell(dbpath, label, ell);
        if (app.got_subcommand(c_ident)) return run_identities(lmax, nmax);
        if (app.got_subcommand(c_cohom)) return run_cohom(p, n, which);
        if (app.got_subcommand(c_rep)) return run_rep(p, n);
        if (app.got_subcommand(c_frob)) return run_frobmat(a, q, p, n);
        if (app.got_subcommand(c_val)) return run_valuation(dbpath, El, Al, p, N);
    } catch (const error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
