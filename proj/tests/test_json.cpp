#include "infsimp/json_io.hpp"
#include "infsimp/random_models.hpp"

#include <doctest.h>

using namespace infsimp;

namespace {

std::string pointer_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const SchemaError& e) {
        return e.pointer();
    }
    return "<no error>";
}

}  // namespace

TEST_CASE("module and face module round trips") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        FaceModule M = random_face_module(seed);
        json j = face_module_to_json(M);
        FaceModule back = face_module_from_json(json::parse(dump_canonical(j)), M.X.ring());
        CHECK(face_module_to_json(back) == j);
        CHECK(back.X.rank() == M.X.rank());
        CHECK(check_faces(back).pass());
        for (int i = 0; i < M.X.rank(); ++i) {
            int b = back.X.index_of(M.X.key(i));
            CHECK(back.X.n_of(b) == M.X.n_of(i));
            CHECK(back.X.m_of(b) == M.X.m_of(i));
        }
    }
    BigradedModule X(Ring::mod(5));
    X.add("a", 0, 1);
    X.add("b", 0, 0);
    json j = module_to_json(X);
    j["d"] = json::array({{{"from", "a"}, {"to", "b"}, {"c", 7}}});
    BigradedModule Y = module_from_json(j, Ring::mod(5));
    CHECK(module_to_json(Y)["d"][0]["c"] == "2");
}

TEST_CASE("colored module round trip") {
    ColoredModule X(Ring::rationals());
    X.add("u", 0, 1, 2);
    X.add("v", 0, 1, 1);
    X.add("w", 1, 1, 0);
    X.add_d("u", "v", Scalar::parse("3/2", Ring::rationals()));
    json j = colored_to_json(X);
    ColoredModule back = colored_from_json(j, Ring::rationals());
    CHECK(colored_to_json(back) == j);
    CHECK(j["d"][0]["c"] == "3/2");
}

TEST_CASE("transfer input and A-infinity round trips") {
    ConeExample ex = acyclic_cone_example(example_xy(), 2, 3);
    TransferInput t{ex.X, ex.Y, ex.sdr};
    json j = transfer_input_to_json(t);
    TransferInput back = transfer_input_from_json(j, Ring::rationals());
    CHECK(transfer_input_to_json(back) == j);
    CHECK(validate_sdr(back.X.X, back.Y, back.sdr).pass());

    for (const AInfAlgebra& A : {example_xy(), example_dga(), example_bad()}) {
        json a = ainf_to_json(A);
        AInfAlgebra B = ainf_from_json(a, A.ring);
        CHECK(ainf_to_json(B) == a);
        CHECK(check_ainf(B).pass() == check_ainf(A).pass());
    }
}

TEST_CASE("schema errors carry JSON pointers") {
    Ring q = Ring::rationals();
    CHECK(pointer_of([&] { ainf_from_json(json::object(), q); }) == "/generators");

    json a = ainf_to_json(example_xy());
    json unknown = a;
    unknown["pi"][0]["entries"][0]["from"][1] = "zz";
    CHECK(pointer_of([&] { ainf_from_json(unknown, q); }) == "/pi/0/entries/0/from/1");

    json arity = a;
    arity["pi"][0]["entries"][0]["from"].push_back("x");
    CHECK(pointer_of([&] { ainf_from_json(arity, q); }) == "/pi/0/entries/0/from");

    json badgen = a;
    badgen["pi"][0]["entries"][0]["to"][0]["gen"] = "q";
    CHECK(pointer_of([&] { ainf_from_json(badgen, q); }) == "/pi/0/entries/0/to/0/gen");

    json deg = a;
    deg["generators"][0]["deg"] = "one";
    CHECK(pointer_of([&] { ainf_from_json(deg, q); }) == "/generators/0/deg");

    json shape = a;
    shape["generators"][1]["deg"] = 5;
    CHECK(pointer_of([&] { ainf_from_json(shape, q); }) == "");

    json m = module_to_json(random_face_module(2).X);
    REQUIRE(!m["d"].empty());
    json coeff = m;
    coeff["d"][0]["c"] = "x/y";
    CHECK(pointer_of([&] { module_from_json(coeff, q); }) == "/d/0/c");
    json key = m;
    key["d"][0]["to"] = "nowhere";
    CHECK(pointer_of([&] { module_from_json(key, q); }) == "/d/0/to");
    json dup = m;
    dup["components"][0]["basis"].push_back(dup["components"][0]["basis"][0]);
    CHECK(pointer_of([&] { module_from_json(dup, q); }).rfind("/components/0/basis/", 0) == 0);

    FaceModule M = random_face_module(2);
    json fm = face_module_to_json(M);
    REQUIRE(!fm["faces"].empty());
    json tup = fm;
    tup["faces"][0]["tuple"] = json::array({2, 1});
    CHECK(pointer_of([&] { face_module_from_json(tup, q); }) == "/faces/0");
    json bideg = fm;
    bideg["faces"][0]["map"][0]["to"] = bideg["faces"][0]["map"][0]["from"];
    CHECK(pointer_of([&] { face_module_from_json(bideg, q); }) == "/faces/0/map");

    json tr = transfer_input_to_json(TransferInput{M, M.X, identity_sdr(M.X)});
    tr.erase("xi");
    CHECK(pointer_of([&] { transfer_input_from_json(tr, q); }) == "/xi");
}

TEST_CASE("canonical dumps are deterministic") {
    json j = ainf_to_json(example_dga());
    std::string s = dump_canonical(j);
    CHECK(s == dump_canonical(json::parse(s)));
    CHECK(s.back() == '\n');
    CHECK(s.find("\"d\"") < s.find("\"generators\""));

    Report r;
    r.checked = 3;
    r.fail("here", "rel", LinComb<std::string>("g", Scalar(-2)));
    json rep = report_to_json(r);
    CHECK(rep["pass"] == false);
    CHECK(rep["checked"] == 3);
    CHECK(rep["violations"][0]["discrepancy"]["g"] == "-2");
}
