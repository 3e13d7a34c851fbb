#pragma once

#include <pglab/error.hpp>
#include <pglab/graph.hpp>
#include <pglab/class_g.hpp>
#include <pglab/coloring.hpp>
#include <pglab/discharging.hpp>
#include <pglab/reducible.hpp>
#include <pglab/corpus_io.hpp>
