#include "inls/rational.hpp"

namespace inls {

Rat Rat::parse(std::string_view s) {
    if (s == "inf" || s == "+inf") return inf();
    auto slash = s.find('/');
    auto to_int = [](std::string_view t) {
        if (t.empty()) throw RatError("empty rational component");
        try {
            size_t used = 0;
            std::string ts(t);
            long v = std::stol(ts, &used);
            if (used != ts.size()) throw RatError("trailing characters in rational: " + ts);
            return v;
        } catch (const std::logic_error&) {
            throw RatError("cannot parse rational component: " + std::string(t));
        }
    };
    if (slash == std::string_view::npos) return Rat(to_int(s));
    long n = to_int(s.substr(0, slash));
    long d = to_int(s.substr(slash + 1));
    return Rat(n, d);
}

}  // namespace inls
