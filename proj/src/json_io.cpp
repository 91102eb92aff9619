#include "necklace/json_io.hpp"

#include <algorithm>

namespace necklace {

namespace {

Json terms_to_json(const Alphabet& alphabet, const std::map<Word, Rational>& terms) {
  std::vector<const Word*> order;
  order.reserve(terms.size());
  for (const auto& [w, c] : terms) order.push_back(&w);
  std::stable_sort(order.begin(), order.end(), [&](const Word* a, const Word* b) {
    int wa = alphabet.word_weight(*a), wb = alphabet.word_weight(*b);
    if (wa != wb) return wa < wb;
    return *a < *b;
  });
  Json arr = Json::array();
  for (const Word* w : order) {
    Json names = Json::array();
    for (unsigned char l : *w) names.push_back(alphabet.name(static_cast<Letter>(l)));
    arr.push_back(Json{{"word", names}, {"coeff", rational_to_string(terms.at(*w))}});
  }
  return arr;
}

Word word_from_json(const Json& names, const Alphabet& alphabet) {
  Word w;
  for (const auto& name : names) w.push_back(static_cast<char>(alphabet.require(name)));
  return w;
}

}  // namespace

Json to_json(const TensorSeries& s) {
  return Json{{"cutoff", s.cutoff()}, {"terms", terms_to_json(*s.alphabet(), s.terms())}};
}

TensorSeries tensor_series_from_json(const Json& j, AlphabetPtr alphabet) {
  TensorSeries s(alphabet, j.at("cutoff").get<int>());
  for (const auto& t : j.at("terms")) {
    s.add_term(word_from_json(t.at("word"), *alphabet),
               rational_from_string(t.at("coeff").get<std::string>()));
  }
  return s;
}

Json to_json(const CyclicSeries& s) {
  return Json{{"cutoff", s.cutoff()},
              {"cyclic", true},
              {"terms", terms_to_json(*s.alphabet(), s.terms())}};
}

CyclicSeries cyclic_series_from_json(const Json& j, AlphabetPtr alphabet) {
  CyclicSeries s(alphabet, j.at("cutoff").get<int>());
  for (const auto& t : j.at("terms")) {
    s.add_term(word_from_json(t.at("word"), *alphabet),
               rational_from_string(t.at("coeff").get<std::string>()));
  }
  return s;
}

Json to_json(const Framing& f) {
  return Json{{"rot_alpha", f.rot_alpha},
              {"rot_beta", f.rot_beta},
              {"rot_gamma", f.rot_gamma},
              {"rot_gamma0", f.rot_gamma0}};
}

Framing framing_from_json(const Json& j, const SurfaceAlgebra& S) {
  return Framing(S, j.at("rot_alpha").get<std::vector<int>>(),
                 j.at("rot_beta").get<std::vector<int>>(),
                 j.at("rot_gamma").get<std::vector<int>>(), j.at("rot_gamma0").get<int>());
}

Json to_json(const TangentialAutomorphism& F) {
  const SurfaceAlgebra& S = F.surface();
  Json log_images = Json::object();
  for (int i = 1; i <= S.genus(); ++i) {
    log_images[S.alphabet()->name(S.x(i))] = to_json(F.log_u().x_image(i));
    log_images[S.alphabet()->name(S.y(i))] = to_json(F.log_u().y_image(i));
  }
  Json gens = Json::array();
  for (int j = 1; j <= S.punctures(); ++j) gens.push_back(to_json(F.log_u().z_generator(j)));
  return Json{{"g", S.genus()},
              {"n", S.punctures()},
              {"cutoff", F.cutoff()},
              {"log_images", log_images},
              {"log_z_generators", gens}};
}

TangentialAutomorphism taut_from_json(const Json& j, const SurfaceAlgebra& S) {
  if (j.at("g").get<int>() != S.genus() || j.at("n").get<int>() != S.punctures())
    throw PreconditionError("taut_from_json: surface mismatch");
  int cutoff = j.at("cutoff").get<int>();
  std::vector<TensorSeries> xs, ys, zs;
  for (int i = 1; i <= S.genus(); ++i) {
    xs.push_back(tensor_series_from_json(j.at("log_images").at(S.alphabet()->name(S.x(i))),
                                         S.alphabet()));
    ys.push_back(tensor_series_from_json(j.at("log_images").at(S.alphabet()->name(S.y(i))),
                                         S.alphabet()));
  }
  for (int p = 1; p <= S.punctures(); ++p)
    zs.push_back(tensor_series_from_json(j.at("log_z_generators").at(static_cast<size_t>(p - 1)),
                                         S.alphabet()));
  return TangentialAutomorphism(
      TangentialDerivation(S, cutoff, std::move(xs), std::move(ys), std::move(zs)));
}

}  // namespace necklace
