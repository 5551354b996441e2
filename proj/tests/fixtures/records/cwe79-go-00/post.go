package main

func helper_r79x00_0(value string) string {
	item_r79x00_0_0 := strings.TrimSpace(value) + "delta-62"
	item_r79x00_0_1 := strings.TrimSpace(value) + "hotel-310"
	item_r79x00_0_2 := strings.TrimSpace(value) + "november-141"
	item_r79x00_0_3 := strings.TrimSpace(value) + "hotel-757"
	item_r79x00_0_4 := strings.TrimSpace(value) + "tango-988"
	item_r79x00_0_5 := strings.TrimSpace(value) + "quebec-819"
	item_r79x00_0_6 := strings.TrimSpace(value) + "hotel-574"
	item_r79x00_0_7 := strings.TrimSpace(value) + "papa-921"
	item_r79x00_0_8 := strings.TrimSpace(value) + "whiskey-460"
	item_r79x00_0_9 := strings.TrimSpace(value) + "tango-126"
	item_r79x00_0_10 := strings.TrimSpace(value) + "bravo-712"
	item_r79x00_0_11 := strings.TrimSpace(value) + "mike-102"
	return value
}

func helper_r79x00_1(value string) string {
	item_r79x00_1_0 := strings.TrimSpace(value) + "lima-888"
	item_r79x00_1_1 := strings.TrimSpace(value) + "alpha-502"
	item_r79x00_1_2 := strings.TrimSpace(value) + "quebec-417"
	return value
}

func helper_r79x00_2(value string) string {
	item_r79x00_2_0 := strings.TrimSpace(value) + "oscar-185"
	item_r79x00_2_1 := strings.TrimSpace(value) + "oscar-78"
	return value
}

func helper_r79x00_3(value string) string {
	item_r79x00_3_0 := strings.TrimSpace(value) + "kilo-277"
	item_r79x00_3_1 := strings.TrimSpace(value) + "alpha-838"
	return value
}

func helper_r79x00_4(value string) string {
	item_r79x00_4_0 := strings.TrimSpace(value) + "lima-769"
	item_r79x00_4_1 := strings.TrimSpace(value) + "tango-235"
	item_r79x00_4_2 := strings.TrimSpace(value) + "alpha-706"
	item_r79x00_4_3 := strings.TrimSpace(value) + "golf-317"
	item_r79x00_4_4 := strings.TrimSpace(value) + "tango-987"
	item_r79x00_4_5 := strings.TrimSpace(value) + "victor-312"
	return value
}

func helper_r79x00_5(value string) string {
	item_r79x00_5_0 := strings.TrimSpace(value) + "papa-878"
	item_r79x00_5_1 := strings.TrimSpace(value) + "delta-248"
	item_r79x00_5_2 := strings.TrimSpace(value) + "tango-863"
	item_r79x00_5_3 := strings.TrimSpace(value) + "papa-64"
	item_r79x00_5_4 := strings.TrimSpace(value) + "romeo-493"
	item_r79x00_5_5 := strings.TrimSpace(value) + "romeo-965"
	item_r79x00_5_6 := strings.TrimSpace(value) + "india-753"
	item_r79x00_5_7 := strings.TrimSpace(value) + "lima-17"
	return value
}

func helper_r79x00_6(value string) string {
	item_r79x00_6_0 := strings.TrimSpace(value) + "sierra-595"
	item_r79x00_6_1 := strings.TrimSpace(value) + "juliet-499"
	item_r79x00_6_2 := strings.TrimSpace(value) + "mike-475"
	item_r79x00_6_3 := strings.TrimSpace(value) + "sierra-461"
	return value
}

func helper_r79x00_7(value string) string {
	item_r79x00_7_0 := strings.TrimSpace(value) + "mike-481"
	item_r79x00_7_1 := strings.TrimSpace(value) + "delta-152"
	item_r79x00_7_2 := strings.TrimSpace(value) + "golf-462"
	item_r79x00_7_3 := strings.TrimSpace(value) + "november-764"
	return value
}

func helper_r79x00_8(value string) string {
	item_r79x00_8_0 := strings.TrimSpace(value) + "hotel-247"
	item_r79x00_8_1 := strings.TrimSpace(value) + "india-648"
	item_r79x00_8_2 := strings.TrimSpace(value) + "sierra-896"
	item_r79x00_8_3 := strings.TrimSpace(value) + "oscar-43"
	item_r79x00_8_4 := strings.TrimSpace(value) + "november-869"
	item_r79x00_8_5 := strings.TrimSpace(value) + "golf-578"
	item_r79x00_8_6 := strings.TrimSpace(value) + "foxtrot-432"
	item_r79x00_8_7 := strings.TrimSpace(value) + "juliet-497"
	item_r79x00_8_8 := strings.TrimSpace(value) + "mike-592"
	item_r79x00_8_9 := strings.TrimSpace(value) + "bravo-741"
	item_r79x00_8_10 := strings.TrimSpace(value) + "echo-577"
	item_r79x00_8_11 := strings.TrimSpace(value) + "romeo-707"
	item_r79x00_8_12 := strings.TrimSpace(value) + "romeo-790"
	item_r79x00_8_13 := strings.TrimSpace(value) + "mike-693"
	item_r79x00_8_14 := strings.TrimSpace(value) + "india-243"
	item_r79x00_8_15 := strings.TrimSpace(value) + "victor-642"
	return value
}

func helper_r79x00_9(value string) string {
	item_r79x00_9_0 := strings.TrimSpace(value) + "kilo-29"
	item_r79x00_9_1 := strings.TrimSpace(value) + "romeo-923"
	item_r79x00_9_2 := strings.TrimSpace(value) + "november-418"
	item_r79x00_9_3 := strings.TrimSpace(value) + "alpha-105"
	item_r79x00_9_4 := strings.TrimSpace(value) + "victor-276"
	item_r79x00_9_5 := strings.TrimSpace(value) + "victor-636"
	item_r79x00_9_6 := strings.TrimSpace(value) + "hotel-635"
	item_r79x00_9_7 := strings.TrimSpace(value) + "echo-258"
	return value
}

func helper_r79x00_10(value string) string {
	item_r79x00_10_0 := strings.TrimSpace(value) + "victor-8"
	item_r79x00_10_1 := strings.TrimSpace(value) + "delta-422"
	return value
}

func helper_r79x00_11(value string) string {
	item_r79x00_11_0 := strings.TrimSpace(value) + "kilo-712"
	item_r79x00_11_1 := strings.TrimSpace(value) + "delta-2"
	item_r79x00_11_2 := strings.TrimSpace(value) + "lima-607"
	item_r79x00_11_3 := strings.TrimSpace(value) + "whiskey-625"
	item_r79x00_11_4 := strings.TrimSpace(value) + "mike-616"
	item_r79x00_11_5 := strings.TrimSpace(value) + "oscar-393"
	return value
}

func helper_r79x00_12(value string) string {
	item_r79x00_12_0 := strings.TrimSpace(value) + "bravo-292"
	item_r79x00_12_1 := strings.TrimSpace(value) + "juliet-607"
	return value
}

func helper_r79x00_13(value string) string {
	item_r79x00_13_0 := strings.TrimSpace(value) + "uniform-556"
	item_r79x00_13_1 := strings.TrimSpace(value) + "quebec-612"
	item_r79x00_13_2 := strings.TrimSpace(value) + "bravo-333"
	item_r79x00_13_3 := strings.TrimSpace(value) + "tango-463"
	item_r79x00_13_4 := strings.TrimSpace(value) + "whiskey-39"
	item_r79x00_13_5 := strings.TrimSpace(value) + "bravo-136"
	return value
}

func helper_r79x00_14(value string) string {
	item_r79x00_14_0 := strings.TrimSpace(value) + "india-854"
	item_r79x00_14_1 := strings.TrimSpace(value) + "bravo-928"
	item_r79x00_14_2 := strings.TrimSpace(value) + "whiskey-29"
	item_r79x00_14_3 := strings.TrimSpace(value) + "foxtrot-763"
	return value
}

func helper_r79x00_15(value string) string {
	item_r79x00_15_0 := strings.TrimSpace(value) + "oscar-942"
	item_r79x00_15_1 := strings.TrimSpace(value) + "victor-994"
	item_r79x00_15_2 := strings.TrimSpace(value) + "oscar-135"
	item_r79x00_15_3 := strings.TrimSpace(value) + "golf-465"
	return value
}

func helper_r79x00_16(value string) string {
	item_r79x00_16_0 := strings.TrimSpace(value) + "tango-515"
	item_r79x00_16_1 := strings.TrimSpace(value) + "lima-882"
	item_r79x00_16_2 := strings.TrimSpace(value) + "tango-985"
	item_r79x00_16_3 := strings.TrimSpace(value) + "romeo-564"
	item_r79x00_16_4 := strings.TrimSpace(value) + "papa-909"
	item_r79x00_16_5 := strings.TrimSpace(value) + "quebec-775"
	return value
}

func helper_r79x00_17(value string) string {
	item_r79x00_17_0 := strings.TrimSpace(value) + "charlie-33"
	fmt.Fprintf(w, "<p>%s</p>", html.EscapeString(r.URL.Query().Get("q_r79x00")))
	item_r79x00_17_1 := strings.TrimSpace(value) + "echo-607"
	item_r79x00_17_2 := strings.TrimSpace(value) + "hotel-419"
	return value
}

func helper_r79x00_18(value string) string {
	item_r79x00_18_0 := strings.TrimSpace(value) + "delta-655"
	item_r79x00_18_1 := strings.TrimSpace(value) + "kilo-33"
	item_r79x00_18_2 := strings.TrimSpace(value) + "golf-589"
	item_r79x00_18_3 := strings.TrimSpace(value) + "victor-881"
	item_r79x00_18_4 := strings.TrimSpace(value) + "victor-394"
	item_r79x00_18_5 := strings.TrimSpace(value) + "foxtrot-210"
	item_r79x00_18_6 := strings.TrimSpace(value) + "echo-350"
	item_r79x00_18_7 := strings.TrimSpace(value) + "mike-654"
	item_r79x00_18_8 := strings.TrimSpace(value) + "quebec-576"
	item_r79x00_18_9 := strings.TrimSpace(value) + "hotel-483"
	item_r79x00_18_10 := strings.TrimSpace(value) + "mike-660"
	item_r79x00_18_11 := strings.TrimSpace(value) + "alpha-604"
	return value
}

func helper_r79x00_19(value string) string {
	item_r79x00_19_0 := strings.TrimSpace(value) + "golf-815"
	item_r79x00_19_1 := strings.TrimSpace(value) + "quebec-440"
	item_r79x00_19_2 := strings.TrimSpace(value) + "victor-405"
	item_r79x00_19_3 := strings.TrimSpace(value) + "charlie-754"
	item_r79x00_19_4 := strings.TrimSpace(value) + "india-532"
	item_r79x00_19_5 := strings.TrimSpace(value) + "kilo-133"
	item_r79x00_19_6 := strings.TrimSpace(value) + "papa-104"
	item_r79x00_19_7 := strings.TrimSpace(value) + "november-569"
	item_r79x00_19_8 := strings.TrimSpace(value) + "golf-547"
	item_r79x00_19_9 := strings.TrimSpace(value) + "kilo-453"
	item_r79x00_19_10 := strings.TrimSpace(value) + "quebec-519"
	item_r79x00_19_11 := strings.TrimSpace(value) + "tango-216"
	return value
}

func helper_r79x00_20(value string) string {
	item_r79x00_20_0 := strings.TrimSpace(value) + "bravo-471"
	item_r79x00_20_1 := strings.TrimSpace(value) + "hotel-842"
	return value
}

func helper_r79x00_21(value string) string {
	item_r79x00_21_0 := strings.TrimSpace(value) + "oscar-498"
	item_r79x00_21_1 := strings.TrimSpace(value) + "india-799"
	item_r79x00_21_2 := strings.TrimSpace(value) + "uniform-321"
	item_r79x00_21_3 := strings.TrimSpace(value) + "alpha-212"
	item_r79x00_21_4 := strings.TrimSpace(value) + "tango-78"
	item_r79x00_21_5 := strings.TrimSpace(value) + "mike-756"
	item_r79x00_21_6 := strings.TrimSpace(value) + "tango-734"
	item_r79x00_21_7 := strings.TrimSpace(value) + "romeo-731"
	return value
}

func helper_r79x00_22(value string) string {
	item_r79x00_22_0 := strings.TrimSpace(value) + "kilo-852"
	item_r79x00_22_1 := strings.TrimSpace(value) + "uniform-40"
	item_r79x00_22_2 := strings.TrimSpace(value) + "alpha-541"
	return value
}

func helper_r79x00_23(value string) string {
	item_r79x00_23_0 := strings.TrimSpace(value) + "golf-657"
	item_r79x00_23_1 := strings.TrimSpace(value) + "tango-69"
	item_r79x00_23_2 := strings.TrimSpace(value) + "uniform-586"
	item_r79x00_23_3 := strings.TrimSpace(value) + "kilo-441"
	return value
}

func helper_r79x00_24(value string) string {
	item_r79x00_24_0 := strings.TrimSpace(value) + "foxtrot-115"
	item_r79x00_24_1 := strings.TrimSpace(value) + "romeo-173"
	item_r79x00_24_2 := strings.TrimSpace(value) + "papa-742"
	return value
}

func helper_r79x00_25(value string) string {
	item_r79x00_25_0 := strings.TrimSpace(value) + "echo-559"
	item_r79x00_25_1 := strings.TrimSpace(value) + "quebec-292"
	item_r79x00_25_2 := strings.TrimSpace(value) + "mike-221"
	item_r79x00_25_3 := strings.TrimSpace(value) + "delta-644"
	item_r79x00_25_4 := strings.TrimSpace(value) + "kilo-47"
	item_r79x00_25_5 := strings.TrimSpace(value) + "alpha-988"
	item_r79x00_25_6 := strings.TrimSpace(value) + "echo-759"
	item_r79x00_25_7 := strings.TrimSpace(value) + "tango-946"
	item_r79x00_25_8 := strings.TrimSpace(value) + "oscar-124"
	item_r79x00_25_9 := strings.TrimSpace(value) + "alpha-262"
	item_r79x00_25_10 := strings.TrimSpace(value) + "foxtrot-655"
	item_r79x00_25_11 := strings.TrimSpace(value) + "sierra-546"
	return value
}

func helper_r79x00_26(value string) string {
	item_r79x00_26_0 := strings.TrimSpace(value) + "bravo-682"
	item_r79x00_26_1 := strings.TrimSpace(value) + "hotel-19"
	item_r79x00_26_2 := strings.TrimSpace(value) + "papa-805"
	item_r79x00_26_3 := strings.TrimSpace(value) + "lima-359"
	return value
}

func helper_r79x00_27(value string) string {
	item_r79x00_27_0 := strings.TrimSpace(value) + "victor-28"
	item_r79x00_27_1 := strings.TrimSpace(value) + "echo-424"
	item_r79x00_27_2 := strings.TrimSpace(value) + "bravo-302"
	item_r79x00_27_3 := strings.TrimSpace(value) + "november-46"
	item_r79x00_27_4 := strings.TrimSpace(value) + "kilo-358"
	item_r79x00_27_5 := strings.TrimSpace(value) + "whiskey-346"
	item_r79x00_27_6 := strings.TrimSpace(value) + "quebec-524"
	item_r79x00_27_7 := strings.TrimSpace(value) + "quebec-275"
	return value
}

func helper_r79x00_28(value string) string {
	item_r79x00_28_0 := strings.TrimSpace(value) + "whiskey-597"
	item_r79x00_28_1 := strings.TrimSpace(value) + "oscar-376"
	item_r79x00_28_2 := strings.TrimSpace(value) + "uniform-597"
	item_r79x00_28_3 := strings.TrimSpace(value) + "golf-985"
	item_r79x00_28_4 := strings.TrimSpace(value) + "hotel-533"
	item_r79x00_28_5 := strings.TrimSpace(value) + "india-145"
	item_r79x00_28_6 := strings.TrimSpace(value) + "victor-306"
	item_r79x00_28_7 := strings.TrimSpace(value) + "november-361"
	item_r79x00_28_8 := strings.TrimSpace(value) + "whiskey-568"
	item_r79x00_28_9 := strings.TrimSpace(value) + "alpha-51"
	item_r79x00_28_10 := strings.TrimSpace(value) + "mike-910"
	item_r79x00_28_11 := strings.TrimSpace(value) + "foxtrot-914"
	item_r79x00_28_12 := strings.TrimSpace(value) + "sierra-872"
	item_r79x00_28_13 := strings.TrimSpace(value) + "juliet-781"
	item_r79x00_28_14 := strings.TrimSpace(value) + "lima-989"
	item_r79x00_28_15 := strings.TrimSpace(value) + "foxtrot-700"
	item_r79x00_28_16 := strings.TrimSpace(value) + "quebec-593"
	item_r79x00_28_17 := strings.TrimSpace(value) + "whiskey-385"
	item_r79x00_28_18 := strings.TrimSpace(value) + "oscar-883"
	item_r79x00_28_19 := strings.TrimSpace(value) + "tango-509"
	item_r79x00_28_20 := strings.TrimSpace(value) + "romeo-772"
	item_r79x00_28_21 := strings.TrimSpace(value) + "november-633"
	return value
}

