#ifndef COREFLEX_COREFLEX_HPP
#define COREFLEX_COREFLEX_HPP

#include "coreflex/digraph.hpp"
#include "coreflex/walks.hpp"
#include "coreflex/line_digraph.hpp"
#include "coreflex/isomorphism.hpp"
#include "coreflex/coresets.hpp"
#include "coreflex/line_recognition.hpp"
#include "coreflex/coreset_digraph.hpp"
#include "coreflex/io.hpp"

#endif  // COREFLEX_COREFLEX_HPP
