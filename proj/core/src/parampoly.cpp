#include <holoext/parampoly.hpp>

namespace holoext {

GaussRational ParamPoly::eval(const GaussRational& a) const {
    GaussRational abar = a.conj();
    GaussRational acc;
    for (const auto& [key, c] : terms_) acc += c * a.pow(key.first) * abar.pow(key.second);
    return acc;
}

}  // namespace holoext
