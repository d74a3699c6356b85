#include <pfcy/multipoly.hpp>

#include <sstream>

namespace pfcy {

void MultiPoly::add_term(const ExpVec &e, const Int &c)
{
    if (c == 0)
        return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MultiPoly MultiPoly::constant(const Int &c)
{
    MultiPoly p;
    p.add_term(ExpVec{}, c);
    return p;
}

MultiPoly MultiPoly::variable(int index, int power)
{
    if (index < 0 || index >= kNumVars)
        throw error("MultiPoly::variable: bad index");
    MultiPoly p;
    ExpVec e{};
    e[index] = power;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::monomial(const Int &c, const ExpVec &e)
{
    MultiPoly p;
    p.add_term(e, c);
    return p;
}

MultiPoly operator+(const MultiPoly &a, const MultiPoly &b)
{
    MultiPoly out = a;
    for (const auto &[e, c] : b.terms_)
        out.add_term(e, c);
    return out;
}

MultiPoly operator-(const MultiPoly &a, const MultiPoly &b)
{
    MultiPoly out = a;
    for (const auto &[e, c] : b.terms_)
        out.add_term(e, -c);
    return out;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
    MultiPoly out;
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            ExpVec e;
            for (int i = 0; i < kNumVars; ++i)
                e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out;
    for (const auto &[e, c] : terms_)
        out.terms_.emplace(e, -c);
    return out;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    static const char *names[kNumVars] = {"x0", "x1", "x2", "x3",
                                          "x4", "x5", "x6", "t"};
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        Int ac = abs(c);
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool anyvar = false;
        for (int i = 0; i < kNumVars; ++i)
            if (e[i])
                anyvar = true;
        if (ac != 1 || !anyvar)
            os << ac.get_str();
        bool started = ac != 1 || !anyvar ? anyvar : false;
        bool needsep = ac != 1;
        for (int i = 0; i < kNumVars; ++i) {
            if (!e[i])
                continue;
            if (needsep || started)
                os << "*";
            os << names[i];
            if (e[i] > 1)
                os << "^" << e[i];
            started = true;
            needsep = false;
        }
    }
    return os.str();
}

} // namespace pfcy
