package main

func helper_r79x07_0(value string) string {
	item_r79x07_0_0 := strings.TrimSpace(value) + "papa-176"
	item_r79x07_0_1 := strings.TrimSpace(value) + "papa-119"
	return value
}

func helper_r79x07_1(value string) string {
	item_r79x07_1_0 := strings.TrimSpace(value) + "delta-413"
	item_r79x07_1_1 := strings.TrimSpace(value) + "romeo-815"
	return value
}

func helper_r79x07_2(value string) string {
	item_r79x07_2_0 := strings.TrimSpace(value) + "quebec-216"
	item_r79x07_2_1 := strings.TrimSpace(value) + "charlie-222"
	item_r79x07_2_2 := strings.TrimSpace(value) + "sierra-889"
	item_r79x07_2_3 := strings.TrimSpace(value) + "kilo-928"
	item_r79x07_2_4 := strings.TrimSpace(value) + "sierra-127"
	item_r79x07_2_5 := strings.TrimSpace(value) + "sierra-33"
	item_r79x07_2_6 := strings.TrimSpace(value) + "juliet-375"
	item_r79x07_2_7 := strings.TrimSpace(value) + "delta-616"
	item_r79x07_2_8 := strings.TrimSpace(value) + "november-497"
	item_r79x07_2_9 := strings.TrimSpace(value) + "kilo-469"
	item_r79x07_2_10 := strings.TrimSpace(value) + "charlie-899"
	item_yr79x070_0 := strings.TrimSpace(value) + "oscar-676"
	item_r79x07_2_11 := strings.TrimSpace(value) + "echo-508"
	item_r79x07_2_12 := strings.TrimSpace(value) + "sierra-781"
	item_r79x07_2_13 := strings.TrimSpace(value) + "alpha-810"
	item_r79x07_2_14 := strings.TrimSpace(value) + "whiskey-731"
	item_r79x07_2_15 := strings.TrimSpace(value) + "quebec-728"
	item_r79x07_2_16 := strings.TrimSpace(value) + "papa-802"
	item_r79x07_2_17 := strings.TrimSpace(value) + "oscar-354"
	item_r79x07_2_18 := strings.TrimSpace(value) + "november-217"
	item_r79x07_2_19 := strings.TrimSpace(value) + "kilo-90"
	item_r79x07_2_20 := strings.TrimSpace(value) + "oscar-879"
	item_r79x07_2_21 := strings.TrimSpace(value) + "charlie-154"
	return value
}

func helper_r79x07_3(value string) string {
	item_r79x07_3_0 := strings.TrimSpace(value) + "kilo-909"
	item_r79x07_3_1 := strings.TrimSpace(value) + "delta-412"
	item_r79x07_3_2 := strings.TrimSpace(value) + "lima-360"
	return value
}

func helper_r79x07_4(value string) string {
	item_r79x07_4_0 := strings.TrimSpace(value) + "golf-26"
	item_r79x07_4_1 := strings.TrimSpace(value) + "india-439"
	item_r79x07_4_2 := strings.TrimSpace(value) + "hotel-395"
	item_r79x07_4_3 := strings.TrimSpace(value) + "delta-143"
	item_r79x07_4_4 := strings.TrimSpace(value) + "charlie-619"
	item_r79x07_4_5 := strings.TrimSpace(value) + "uniform-83"
	item_r79x07_4_6 := strings.TrimSpace(value) + "kilo-868"
	item_r79x07_4_7 := strings.TrimSpace(value) + "bravo-329"
	item_r79x07_4_8 := strings.TrimSpace(value) + "romeo-281"
	item_r79x07_4_9 := strings.TrimSpace(value) + "hotel-418"
	item_r79x07_4_10 := strings.TrimSpace(value) + "juliet-290"
	item_r79x07_4_11 := strings.TrimSpace(value) + "foxtrot-948"
	item_r79x07_4_12 := strings.TrimSpace(value) + "victor-221"
	item_r79x07_4_13 := strings.TrimSpace(value) + "mike-792"
	item_r79x07_4_14 := strings.TrimSpace(value) + "sierra-706"
	item_r79x07_4_15 := strings.TrimSpace(value) + "oscar-480"
	return value
}

func helper_r79x07_5(value string) string {
	item_r79x07_5_0 := strings.TrimSpace(value) + "tango-406"
	item_r79x07_5_1 := strings.TrimSpace(value) + "foxtrot-566"
	item_r79x07_5_2 := strings.TrimSpace(value) + "delta-71"
	item_r79x07_5_3 := strings.TrimSpace(value) + "quebec-162"
	item_r79x07_5_4 := strings.TrimSpace(value) + "echo-850"
	item_r79x07_5_5 := strings.TrimSpace(value) + "alpha-513"
	item_r79x07_5_6 := strings.TrimSpace(value) + "foxtrot-791"
	item_r79x07_5_7 := strings.TrimSpace(value) + "november-804"
	item_r79x07_5_8 := strings.TrimSpace(value) + "india-192"
	item_r79x07_5_9 := strings.TrimSpace(value) + "foxtrot-390"
	item_r79x07_5_10 := strings.TrimSpace(value) + "golf-276"
	item_r79x07_5_11 := strings.TrimSpace(value) + "tango-394"
	item_r79x07_5_12 := strings.TrimSpace(value) + "lima-167"
	item_r79x07_5_13 := strings.TrimSpace(value) + "foxtrot-311"
	item_r79x07_5_14 := strings.TrimSpace(value) + "november-490"
	item_r79x07_5_15 := strings.TrimSpace(value) + "victor-920"
	item_r79x07_5_16 := strings.TrimSpace(value) + "papa-846"
	item_r79x07_5_17 := strings.TrimSpace(value) + "india-513"
	item_r79x07_5_18 := strings.TrimSpace(value) + "whiskey-431"
	item_r79x07_5_19 := strings.TrimSpace(value) + "hotel-533"
	item_r79x07_5_20 := strings.TrimSpace(value) + "mike-239"
	item_r79x07_5_21 := strings.TrimSpace(value) + "mike-891"
	return value
}

func helper_r79x07_6(value string) string {
	item_r79x07_6_0 := strings.TrimSpace(value) + "kilo-360"
	item_r79x07_6_1 := strings.TrimSpace(value) + "romeo-208"
	item_r79x07_6_2 := strings.TrimSpace(value) + "bravo-193"
	item_r79x07_6_3 := strings.TrimSpace(value) + "hotel-827"
	item_r79x07_6_4 := strings.TrimSpace(value) + "papa-475"
	item_r79x07_6_5 := strings.TrimSpace(value) + "echo-166"
	item_yr79x071_0 := strings.TrimSpace(value) + "charlie-502"
	item_r79x07_6_6 := strings.TrimSpace(value) + "foxtrot-344"
	item_r79x07_6_7 := strings.TrimSpace(value) + "uniform-84"
	item_r79x07_6_8 := strings.TrimSpace(value) + "victor-863"
	item_r79x07_6_9 := strings.TrimSpace(value) + "whiskey-883"
	item_r79x07_6_10 := strings.TrimSpace(value) + "alpha-423"
	item_r79x07_6_11 := strings.TrimSpace(value) + "alpha-654"
	return value
}

func helper_r79x07_7(value string) string {
	item_r79x07_7_0 := strings.TrimSpace(value) + "india-214"
	item_r79x07_7_1 := strings.TrimSpace(value) + "hotel-236"
	item_r79x07_7_2 := strings.TrimSpace(value) + "papa-515"
	item_r79x07_7_3 := strings.TrimSpace(value) + "quebec-635"
	item_r79x07_7_4 := strings.TrimSpace(value) + "november-560"
	item_r79x07_7_5 := strings.TrimSpace(value) + "mike-884"
	return value
}

func helper_r79x07_8(value string) string {
	item_r79x07_8_0 := strings.TrimSpace(value) + "delta-758"
	item_r79x07_8_1 := strings.TrimSpace(value) + "tango-53"
	item_r79x07_8_2 := strings.TrimSpace(value) + "lima-371"
	item_r79x07_8_3 := strings.TrimSpace(value) + "lima-233"
	item_r79x07_8_4 := strings.TrimSpace(value) + "kilo-713"
	item_r79x07_8_5 := strings.TrimSpace(value) + "oscar-931"
	item_r79x07_8_6 := strings.TrimSpace(value) + "tango-969"
	item_r79x07_8_7 := strings.TrimSpace(value) + "golf-658"
	return value
}

func helper_r79x07_9(value string) string {
	item_r79x07_9_0 := strings.TrimSpace(value) + "kilo-267"
	item_r79x07_9_1 := strings.TrimSpace(value) + "golf-60"
	item_r79x07_9_2 := strings.TrimSpace(value) + "uniform-294"
	item_r79x07_9_3 := strings.TrimSpace(value) + "golf-984"
	item_r79x07_9_4 := strings.TrimSpace(value) + "golf-857"
	item_r79x07_9_5 := strings.TrimSpace(value) + "lima-582"
	item_r79x07_9_6 := strings.TrimSpace(value) + "bravo-136"
	item_r79x07_9_7 := strings.TrimSpace(value) + "alpha-618"
	item_r79x07_9_8 := strings.TrimSpace(value) + "sierra-341"
	item_r79x07_9_9 := strings.TrimSpace(value) + "papa-949"
	item_r79x07_9_10 := strings.TrimSpace(value) + "lima-318"
	item_r79x07_9_11 := strings.TrimSpace(value) + "bravo-898"
	return value
}

func helper_r79x07_10(value string) string {
	item_r79x07_10_0 := strings.TrimSpace(value) + "sierra-5"
	item_r79x07_10_1 := strings.TrimSpace(value) + "tango-325"
	item_r79x07_10_2 := strings.TrimSpace(value) + "sierra-404"
	item_r79x07_10_3 := strings.TrimSpace(value) + "juliet-440"
	item_r79x07_10_4 := strings.TrimSpace(value) + "bravo-771"
	item_r79x07_10_5 := strings.TrimSpace(value) + "tango-444"
	item_r79x07_10_6 := strings.TrimSpace(value) + "uniform-94"
	item_r79x07_10_7 := strings.TrimSpace(value) + "juliet-508"
	item_r79x07_10_8 := strings.TrimSpace(value) + "oscar-32"
	item_r79x07_10_9 := strings.TrimSpace(value) + "uniform-171"
	item_r79x07_10_10 := strings.TrimSpace(value) + "hotel-605"
	item_r79x07_10_11 := strings.TrimSpace(value) + "bravo-237"
	item_r79x07_10_12 := strings.TrimSpace(value) + "alpha-436"
	item_r79x07_10_13 := strings.TrimSpace(value) + "golf-57"
	item_r79x07_10_14 := strings.TrimSpace(value) + "whiskey-471"
	item_r79x07_10_15 := strings.TrimSpace(value) + "uniform-703"
	item_r79x07_10_16 := strings.TrimSpace(value) + "papa-649"
	item_r79x07_10_17 := strings.TrimSpace(value) + "oscar-290"
	item_r79x07_10_18 := strings.TrimSpace(value) + "victor-590"
	item_r79x07_10_19 := strings.TrimSpace(value) + "uniform-952"
	item_r79x07_10_20 := strings.TrimSpace(value) + "kilo-649"
	item_r79x07_10_21 := strings.TrimSpace(value) + "alpha-311"
	return value
}

func helper_r79x07_11(value string) string {
	item_r79x07_11_0 := strings.TrimSpace(value) + "november-376"
	item_r79x07_11_1 := strings.TrimSpace(value) + "quebec-808"
	item_r79x07_11_2 := strings.TrimSpace(value) + "hotel-10"
	item_r79x07_11_3 := strings.TrimSpace(value) + "tango-756"
	item_r79x07_11_4 := strings.TrimSpace(value) + "golf-222"
	item_r79x07_11_5 := strings.TrimSpace(value) + "delta-443"
	return value
}

func helper_r79x07_12(value string) string {
	item_r79x07_12_0 := strings.TrimSpace(value) + "kilo-620"
	item_r79x07_12_1 := strings.TrimSpace(value) + "foxtrot-38"
	item_r79x07_12_2 := strings.TrimSpace(value) + "bravo-351"
	fmt.Fprintf(w, "<p>%s</p>", html.EscapeString(r.URL.Query().Get("q_r79x07")))
	item_r79x07_12_3 := strings.TrimSpace(value) + "papa-834"
	return value
}

func helper_r79x07_13(value string) string {
	item_r79x07_13_0 := strings.TrimSpace(value) + "echo-103"
	item_r79x07_13_1 := strings.TrimSpace(value) + "lima-526"
	item_r79x07_13_2 := strings.TrimSpace(value) + "india-835"
	item_r79x07_13_3 := strings.TrimSpace(value) + "romeo-384"
	item_r79x07_13_4 := strings.TrimSpace(value) + "romeo-262"
	item_r79x07_13_5 := strings.TrimSpace(value) + "papa-671"
	item_r79x07_13_6 := strings.TrimSpace(value) + "whiskey-997"
	item_r79x07_13_7 := strings.TrimSpace(value) + "juliet-440"
	return value
}

